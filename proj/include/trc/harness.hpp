#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace trc {

/// One checked claim on one graph. Expected and observed are exact textual
/// integers or predicates; pass means they are identical.
struct ClaimResult {
    std::string claim_id;
    /// Human-readable label ("path:8", "tree n=6", ...).
    std::string instance;
    std::string instance_graph6;
    std::string expected;
    std::string observed;
    bool pass = false;
    std::int64_t millis = 0;
};

// Each suite throws std::invalid_argument for ranges outside its limits.

/// P_n for n in [lo, hi] within [2, 12]: value 2 up to n = 7 and 3 from
/// n = 8, the explicit three-block partition for n >= 8, and the bounds report.
auto verify_paths(int lo, int hi) -> std::vector<ClaimResult>;

/// C_n for n in [lo, hi] within [3, 12]: 2 for C_3, then 4 when 4 | n and 3
/// otherwise, with the explicit four- and three-block partitions, girth-7
/// tightness for n >= 7 with 4 not dividing n, and the bounds report.
auto verify_cycles(int lo, int hi) -> std::vector<ClaimResult>;

struct CompleteRanges {
    int complete_lo = 4, complete_hi = 8;   // K_n, within [4, 8]
    int bipartite_max = 4;                  // K_{p,q}, 2 <= p <= q <= max, max <= 4
    int star_lo = 3, star_hi = 8;           // K_{1,n-1}, within [3, 8]
};

/// K_n = n, K_{p,q} = p + q, K_{1,n-1} = 2, each with its bounds report.
auto verify_complete_and_bipartite(const CompleteRanges & ranges = {}) -> std::vector<ClaimResult>;

/// Exact gamma_tr against the closed forms: paths and cycles with
/// n in [4, max_n], K_n for 4..min(8, max_n), K_{p,q} with 2 <= p <= q <= 4
/// and p + q <= max_n, stars 2..min(8, max_n). max_n within [4, 12].
auto verify_gamma_closed_forms(int max_n = 12) -> std::vector<ClaimResult>;

/// Every tree class with 3 <= n <= max_n (max_n <= 9): value n-1 exactly for
/// P_3; for n >= 4 value <= n-2 with equality exactly for K_{1,3}, P_4, P_5;
/// search against oracle for n <= 7; bounds report.
auto verify_trees(int max_n) -> std::vector<ClaimResult>;

/// Every connected class with 2 <= n <= max_n (max_n <= 6): the
/// universal-vertex sufficient condition, the necessary conditions for
/// value n, the triangle-free characterisation, d_t = d_t^r, the minimum
/// degree lower bound, the partner cap on the witness, search against
/// oracle, the bounds report, the constructive lower bound, both leaf
/// properties.
auto verify_catalog(int max_n) -> std::vector<ClaimResult>;

/// The figure-1 graph, C_5 plus a chord, and the friendship graphs F_2, F_3.
auto verify_named() -> std::vector<ClaimResult>;

/// Suite names accepted by run_suite: paths, cycles, complete, gamma, trees,
/// catalog, named, all.
auto suite_names() -> const std::vector<std::string> &;

/// Runs a suite with every range capped at max_n (and at the suite's own
/// limit). Throws std::invalid_argument for unknown suites.
auto run_suite(const std::string & name, int max_n) -> std::vector<ClaimResult>;

/// Largest max_n each suite accepts.
auto suite_max_order(const std::string & name) -> int;

} // namespace trc
