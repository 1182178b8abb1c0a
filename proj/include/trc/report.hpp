#pragma once

#include "trc/harness.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace trc {

enum class ReportFormat { json, csv, markdown };

/// Throws std::invalid_argument for names other than json, csv, markdown.
auto parse_report_format(std::string_view name) -> ReportFormat;

struct ReportOptions {
    /// Emit measured runtimes; when false every millis field is 0 so that
    /// repeated runs are byte-identical.
    bool timings = false;
};

struct ReportSummary {
    int passed = 0;
    int total = 0;

    [[nodiscard]] auto ok() const -> bool { return passed == total; }
    /// "passed/total"
    [[nodiscard]] auto text() const -> std::string { return std::to_string(passed) + "/" + std::to_string(total); }
};

auto summarise(const std::vector<ClaimResult> & results) -> ReportSummary;

/// Results are ordered by claim id, then graph6 instance (stable otherwise).
///
/// json:     {"status": "pass"|"fail", "summary": {"passed", "total", "text"},
///            "results": [{claim_id, instance_graph6, expected, observed, pass, millis}]}
/// csv:      header row with the same six columns, then one row per result,
///           then a "# summary <passed>/<total> <status>" trailer line
/// markdown: table with an extra instance column, then a summary line
auto emit_report(std::vector<ClaimResult> results, ReportFormat format, const ReportOptions & options = {}) -> std::string;

} // namespace trc
