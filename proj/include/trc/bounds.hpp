#pragma once

#include "trc/coalition.hpp"
#include "trc/graph.hpp"

#include <string>
#include <vector>

namespace trc {

enum class Comparison { equal, at_least, at_most, between };

auto to_string(Comparison c) -> const char *;

/// One known bound on the total restrained coalition number, evaluated
/// against a solved value. Bounds whose hypothesis fails are still listed,
/// with `applicable` false and `pass` true.
struct BoundEntry {
    std::string id;
    std::string hypothesis;
    bool applicable = false;
    Comparison comparison = Comparison::equal;
    /// For `between`, the lower end; otherwise the bound itself.
    int bound = 0;
    /// Upper end for `between`; equal to `bound` otherwise.
    int bound_upper = 0;
    int observed = 0;
    bool pass = true;
    /// The bound is met with equality.
    bool tight = false;
};

struct BoundsReport {
    std::vector<BoundEntry> entries;

    [[nodiscard]] auto all_pass() const -> bool;
    [[nodiscard]] auto find(const std::string & id) const -> const BoundEntry *;
};

// Bound identifiers, in report order.
inline constexpr const char * bound_isolated_zero = "isolated-zero";
inline constexpr const char * bound_range = "range";
inline constexpr const char * bound_domatic = "domatic-double";
inline constexpr const char * bound_total_domatic = "total-domatic-double";
inline constexpr const char * bound_min_degree = "min-degree-floor";
inline constexpr const char * bound_girth7 = "girth7-max-degree";
inline constexpr const char * bound_leaf = "leaf-max-degree";
inline constexpr const char * bound_min_degree2 = "min-degree2-double-max-degree";

/// Evaluates every bound against solved.value:
///   isolated-zero                 isolated vertex          C = 0
///   range                         isolate-free             2 <= C <= n
///   domatic-double                isolate-free             C >= 2 d_t^r
///   total-domatic-double          isolate-free             C >= 2 d_t
///   min-degree-floor              isolate-free             C >= 2 floor(n / (n - delta + 1))
///   girth7-max-degree             connected, delta >= 2,
///                                 girth >= 7               C >= Delta + 1
///   leaf-max-degree               delta = 1                C <= Delta + 1
///   min-degree2-double-max-degree delta = 2                C <= 2 Delta
auto bounds_report(const Graph & g, const TrcSolveResult & solved) -> BoundsReport;

} // namespace trc
