#include "trc/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace trc {

auto parse_report_format(std::string_view name) -> ReportFormat
{
    if (name == "json")
        return ReportFormat::json;
    if (name == "csv")
        return ReportFormat::csv;
    if (name == "markdown")
        return ReportFormat::markdown;
    throw std::invalid_argument("unknown report format \"" + std::string(name) + "\"");
}

auto summarise(const std::vector<ClaimResult> & results) -> ReportSummary
{
    ReportSummary s;
    s.total = static_cast<int>(results.size());
    s.passed = static_cast<int>(std::ranges::count_if(results, &ClaimResult::pass));
    return s;
}

namespace {
    auto csv_field(const std::string & s) -> std::string
    {
        if (s.find_first_of(",\"\n\r") == std::string::npos)
            return s;
        std::string out = "\"";
        for (char c : s) {
            if (c == '"')
                out += '"';
            out += c;
        }
        return out + "\"";
    }

    auto markdown_cell(const std::string & s) -> std::string
    {
        std::string out;
        for (char c : s) {
            if (c == '|' || c == '\\')
                out += '\\';
            out += c;
        }
        return out;
    }
}

auto emit_report(std::vector<ClaimResult> results, ReportFormat format, const ReportOptions & options) -> std::string
{
    std::ranges::stable_sort(results, [](const ClaimResult & a, const ClaimResult & b) {
        return std::tie(a.claim_id, a.instance_graph6) < std::tie(b.claim_id, b.instance_graph6);
    });
    if (! options.timings)
        for (auto & r : results)
            r.millis = 0;

    const auto summary = summarise(results);
    const std::string status = summary.ok() ? "pass" : "fail";

    switch (format) {
    case ReportFormat::json: {
        auto rows = nlohmann::ordered_json::array();
        for (const auto & r : results)
            rows.push_back({{"claim_id", r.claim_id}, {"instance_graph6", r.instance_graph6}, {"expected", r.expected},
                    {"observed", r.observed}, {"pass", r.pass}, {"millis", r.millis}});
        nlohmann::ordered_json doc;
        doc["status"] = status;
        doc["summary"] = {{"passed", summary.passed}, {"total", summary.total}, {"text", summary.text()}};
        doc["results"] = std::move(rows);
        return doc.dump(2) + "\n";
    }
    case ReportFormat::csv: {
        std::ostringstream out;
        out << "claim_id,instance_graph6,expected,observed,pass,millis\n";
        for (const auto & r : results)
            out << csv_field(r.claim_id) << ',' << csv_field(r.instance_graph6) << ',' << csv_field(r.expected) << ','
                << csv_field(r.observed) << ',' << (r.pass ? "true" : "false") << ',' << r.millis << '\n';
        out << "# summary " << summary.text() << ' ' << status << '\n';
        return out.str();
    }
    case ReportFormat::markdown: {
        std::ostringstream out;
        out << "| claim_id | instance | instance_graph6 | expected | observed | pass | millis |\n";
        out << "|---|---|---|---|---|---|---|\n";
        for (const auto & r : results)
            out << "| " << markdown_cell(r.claim_id) << " | " << markdown_cell(r.instance) << " | `" << markdown_cell(r.instance_graph6)
                << "` | " << markdown_cell(r.expected) << " | " << markdown_cell(r.observed) << " | " << (r.pass ? "yes" : "**no**")
                << " | " << r.millis << " |\n";
        out << "\n**Summary:** " << summary.text() << " (" << status << ")\n";
        return out.str();
    }
    }
    throw std::invalid_argument("unknown report format");
}

} // namespace trc
