#include "trc/harness.hpp"

#include "trc/bounds.hpp"
#include "trc/catalog.hpp"
#include "trc/coalition.hpp"
#include "trc/domination.hpp"
#include "trc/families.hpp"
#include "trc/graph_io.hpp"
#include "trc/metrics.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <stdexcept>

namespace trc {

namespace {
    using Clock = std::chrono::steady_clock;

    auto text(bool b) -> std::string { return b ? "true" : "false"; }

    void require_range(int lo, int hi, int min, int max, const char * suite)
    {
        if (lo < min || hi > max)
            throw std::invalid_argument(std::string(suite) + " suite supports orders in [" + std::to_string(min) + ", "
                    + std::to_string(max) + "]");
    }

    // Records one claim; `observe` runs timed and returns the observed text.
    struct Recorder {
        std::vector<ClaimResult> results;

        void claim(std::string id, std::string instance, const Graph & g, std::string expected, const std::function<std::string()> & observe)
        {
            auto start = Clock::now();
            auto observed = observe();
            auto millis = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
            bool pass = observed == expected;
            results.push_back({std::move(id), std::move(instance), encode_graph6(g), std::move(expected), std::move(observed), pass, millis});
        }
    };

    auto ctr(const Graph & g, SolveMode mode = SolveMode::search) -> std::string
    {
        return std::to_string(c_tr_exact(g, mode).value);
    }

    auto partition_from(int n, const std::vector<std::vector<int>> & blocks) -> Partition
    {
        std::vector<VertexSet> sets;
        for (const auto & b : blocks)
            sets.push_back(VertexSet::of(n, b));
        return Partition(n, std::move(sets));
    }

    // Connected P_2 or complete bipartite with both sides of size >= 2.
    auto is_p2_or_balanced_complete_bipartite(const Graph & g) -> bool
    {
        const int n = g.order();
        if (n == 2)
            return g.edge_count() == 1;
        auto dist = bfs_distances(g, 0);
        VertexSet even(n);
        for (int v = 0; v < n; ++v) {
            if (dist[static_cast<std::size_t>(v)] < 0)
                return false;
            if (dist[static_cast<std::size_t>(v)] % 2 == 0)
                even.insert(v);
        }
        const auto odd = even.complement();
        for (int v = 0; v < n; ++v) {
            const auto & other = even.contains(v) ? odd : even;
            if (g.neighbourhood(v) != other)
                return false;
        }
        return even.size() >= 2 && odd.size() >= 2;
    }
}

auto verify_paths(int lo, int hi) -> std::vector<ClaimResult>
{
    require_range(lo, hi, 2, 12, "paths");
    Recorder r;
    for (int n = lo; n <= hi; ++n) {
        auto g = path_graph(n);
        auto name = "path:" + std::to_string(n);
        r.claim("path-ctr", name, g, n <= 7 ? "2" : "3", [&] { return ctr(g); });
        if (n >= 8) {
            // X = {v_1..v_{n-6}, v_{n-1}, v_n}, Y = {v_{n-5}, v_{n-4}}, Z = {v_{n-3}, v_{n-2}}
            std::vector<int> x;
            for (int v = 0; v < n - 6; ++v)
                x.push_back(v);
            x.insert(x.end(), {n - 2, n - 1});
            auto p = partition_from(n, {x, {n - 6, n - 5}, {n - 4, n - 3}});
            r.claim("path-three-block-construction", name, g, "true", [&] { return text(is_trc_partition(g, p)); });
        }
    }
    return r.results;
}

auto verify_cycles(int lo, int hi) -> std::vector<ClaimResult>
{
    require_range(lo, hi, 3, 12, "cycles");
    Recorder r;
    for (int n = lo; n <= hi; ++n) {
        auto g = cycle_graph(n);
        auto name = "cycle:" + std::to_string(n);
        std::string expected = n == 3 ? "2" : (n % 4 == 0 ? "4" : "3");
        r.claim("cycle-ctr", name, g, expected, [&] { return ctr(g); });

        if (n >= 4 && n % 4 == 0) {
            // A = {v_n}, B = {v_{n-2}}, C = {v_i : i = 1,2 mod 4, i <= n-6} + {v_{n-3}},
            // D = {v_i : i = 3,0 mod 4, 3 <= i <= n-4} + {v_{n-1}}; labels shifted to 0-based.
            std::vector<int> c, d;
            for (int i = 1; i <= n - 4; ++i) {
                if ((i % 4 == 1 || i % 4 == 2) && i <= n - 6)
                    c.push_back(i - 1);
                if ((i % 4 == 3 || i % 4 == 0) && i >= 3)
                    d.push_back(i - 1);
            }
            c.push_back(n - 4);
            d.push_back(n - 2);
            auto p = partition_from(n, {{n - 1}, {n - 3}, c, d});
            r.claim("cycle-four-block-construction", name, g, "true", [&] { return text(is_trc_partition(g, p)); });
        }
        else if (n >= 5) {
            // A = {v_1..v_{n-4}}, B = {v_n, v_{n-1}}, C = {v_{n-2}, v_{n-3}}
            std::vector<int> a;
            for (int v = 0; v < n - 4; ++v)
                a.push_back(v);
            auto p = partition_from(n, {a, {n - 1, n - 2}, {n - 3, n - 4}});
            r.claim("cycle-three-block-construction", name, g, "true", [&] { return text(is_trc_partition(g, p)); });
        }
    }
    return r.results;
}

auto verify_complete_and_bipartite(const CompleteRanges & ranges) -> std::vector<ClaimResult>
{
    require_range(ranges.complete_lo, ranges.complete_hi, 4, 8, "complete");
    require_range(2, ranges.bipartite_max, 2, 4, "complete bipartite");
    require_range(ranges.star_lo, ranges.star_hi, 3, 8, "star");
    Recorder r;
    for (int n = ranges.complete_lo; n <= ranges.complete_hi; ++n) {
        auto g = complete_graph(n);
        r.claim("complete-ctr", "complete:" + std::to_string(n), g, std::to_string(n), [&] { return ctr(g); });
    }
    for (int p = 2; p <= ranges.bipartite_max; ++p)
        for (int q = p; q <= ranges.bipartite_max; ++q) {
            auto g = complete_bipartite_graph(p, q);
            r.claim("complete-bipartite-ctr", "kbip:" + std::to_string(p) + "," + std::to_string(q), g, std::to_string(p + q), [&] { return ctr(g); });
        }
    for (int n = ranges.star_lo; n <= ranges.star_hi; ++n) {
        auto g = star_graph(n);
        r.claim("star-ctr", "star:" + std::to_string(n), g, "2", [&] { return ctr(g); });
    }
    return r.results;
}

auto verify_gamma_closed_forms(int max_n) -> std::vector<ClaimResult>
{
    require_range(4, max_n, 4, 12, "gamma");
    Recorder r;
    auto check = [&](FamilyKind kind, std::vector<int> params, const std::string & name) {
        auto g = family(kind, params);
        r.claim("gamma-tr-closed-form", name, g, std::to_string(gamma_tr_closed_form(kind, params)),
                [&] { return std::to_string(gamma(g, DominationKind::total_restrained).value); });
    };
    for (int n = 4; n <= max_n; ++n)
        check(FamilyKind::path, {n}, "path:" + std::to_string(n));
    for (int n = 4; n <= max_n; ++n)
        check(FamilyKind::cycle, {n}, "cycle:" + std::to_string(n));
    for (int n = 4; n <= std::min(8, max_n); ++n)
        check(FamilyKind::complete, {n}, "complete:" + std::to_string(n));
    for (int p = 2; p <= 4; ++p)
        for (int q = p; q <= 4 && p + q <= max_n; ++q)
            check(FamilyKind::complete_bipartite, {p, q}, "kbip:" + std::to_string(p) + "," + std::to_string(q));
    for (int n = 2; n <= std::min(8, max_n); ++n)
        check(FamilyKind::star, {n}, "star:" + std::to_string(n));
    return r.results;
}

auto verify_trees(int max_n) -> std::vector<ClaimResult>
{
    require_range(3, max_n, 3, max_tree_catalog_order, "trees");
    const auto p3 = canonical_form(path_graph(3));
    const std::vector<std::string> near_extremal{canonical_form(star_graph(4)), canonical_form(path_graph(4)), canonical_form(path_graph(5))};

    Recorder r;
    for (int n = 3; n <= max_n; ++n) {
        for (const auto & t : enumerate_trees(n)) {
            auto key = canonical_form(t);
            auto name = "tree:" + std::to_string(n);
            auto solved = c_tr_exact(t);
            r.claim("tree-ctr-n-minus-1-only-p3", name, t, text(key == p3), [&] { return text(solved.value == n - 1); });
            if (n >= 4) {
                r.claim("tree-ctr-at-most-n-minus-2", name, t, "true", [&] { return text(solved.value <= n - 2); });
                bool listed = std::ranges::find(near_extremal, key) != near_extremal.end();
                r.claim("tree-ctr-n-minus-2-characterisation", name, t, text(listed), [&] { return text(solved.value == n - 2); });
            }
            if (n <= 7)
                r.claim("tree-search-equals-oracle", name, t, std::to_string(solved.value), [&] { return ctr(t, SolveMode::oracle); });
        }
    }
    return r.results;
}

auto verify_catalog(int max_n) -> std::vector<ClaimResult>
{
    require_range(2, max_n, 2, 6, "catalog");
    Recorder r;
    for (int n = 2; n <= max_n; ++n) {
        for (const auto & g : enumerate_connected_graphs(n)) {
            const auto name = "connected:" + std::to_string(n);
            const auto m = metrics(g);
            const auto solved = c_tr_exact(g);
            const auto & witness = *solved.witness;
            const int c = solved.value;

            if (m.min_degree >= 3 && m.has_universal_vertex)
                r.claim("universal-min-degree-3-ctr-n", name, g, std::to_string(n), [&] { return std::to_string(c); });

            if (n >= 3 && c == n)
                r.claim("ctr-n-necessary-conditions", name, g, "true", [&] {
                    return text(gamma(g, DominationKind::total_restrained).value == 2 && m.min_degree >= 2 && m.diameter && *m.diameter <= 2);
                });

            if (m.triangle_free)
                r.claim("triangle-free-ctr-n-characterisation", name, g, text(is_p2_or_balanced_complete_bipartite(g)),
                        [&] { return text(c == n); });

            r.claim("total-domatic-equality", name, g, std::to_string(domatic(g, DominationKind::total).value),
                    [&] { return std::to_string(domatic(g, DominationKind::total_restrained).value); });

            r.claim("min-degree-lower-bound", name, g, "true",
                    [&] { return text(c >= 2 * (n / (n - m.min_degree + 1))); });

            r.claim("degree-cap-partners", name, g, "true", [&] {
                for (int i = 0; i < witness.size(); ++i)
                    if (static_cast<int>(coalition_partners(g, witness, i).size()) > m.max_degree)
                        return text(false);
                return text(true);
            });

            r.claim("search-equals-oracle", name, g, std::to_string(c), [&] { return ctr(g, SolveMode::oracle); });

            r.claim("constructive-lower-bound", name, g, "true", [&] {
                auto p = constructive_lower_bound(g);
                return text(is_trc_partition(g, p) && p.size() >= 2 * domatic(g, DominationKind::total_restrained).value);
            });

            if (! m.leaves.empty()) {
                // Every coalition pair of the witness meets the blocks holding
                // a leaf or its support.
                r.claim("leaf-in-every-coalition", name, g, "true", [&] {
                    auto check = check_trc_partition(g, witness);
                    for (const auto & leaf : m.leaves) {
                        int x = witness.block_of(leaf.vertex), y = witness.block_of(leaf.support);
                        for (int a = 0; a < witness.size(); ++a)
                            for (int b : check.blocks[static_cast<std::size_t>(a)].partners)
                                if (a != x && a != y && b != x && b != y)
                                    return text(false);
                    }
                    return text(true);
                });

                // Leaves lie in the minimum TRD-set and in every coalition union.
                r.claim("leaf-in-every-trd-witness", name, g, "true", [&] {
                    std::vector<VertexSet> trd_sets{gamma(g, DominationKind::total_restrained).witness};
                    auto check = check_trc_partition(g, witness);
                    for (int a = 0; a < witness.size(); ++a)
                        for (int b : check.blocks[static_cast<std::size_t>(a)].partners)
                            trd_sets.push_back(witness.block(a) | witness.block(b));
                    for (const auto & s : trd_sets)
                        for (const auto & leaf : m.leaves)
                            if (! s.contains(leaf.vertex))
                                return text(false);
                    return text(true);
                });
            }
        }
    }
    return r.results;
}

auto verify_named() -> std::vector<ClaimResult>
{
    Recorder r;
    {
        auto g = figure1_graph();
        auto solved = c_tr_exact(g);
        r.claim("figure1-ctr", "figure1", g, "4", [&] { return std::to_string(solved.value); });
        r.claim("figure1-leaf-bound-tight", "figure1", g, std::to_string(g.max_degree() + 1), [&] { return std::to_string(solved.value); });
        auto phi = partition_from(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}});
        // Compared up to isomorphism: the leaf v_8 lies in V_4, so that block is the centre.
        r.claim("figure1-trcg-star", "figure1", g, canonical_form(star_graph(4)), [&] {
            return is_trc_partition(g, phi) ? canonical_form(build_trcg(g, phi)) : std::string("not a trc-partition");
        });
        r.claim("figure1-trcg-centre-holds-leaf", "figure1", g, "3", [&] {
            auto partners = coalition_partners(g, phi, phi.block_of(7));
            return std::to_string(partners.size());
        });
    }
    {
        auto g = c5_chord_graph();
        auto m = metrics(g);
        r.claim("c5chord-necessary-conditions-hold", "c5chord", g, "true", [&] {
            return text(gamma(g, DominationKind::total_restrained).value == 2 && m.min_degree >= 2 && m.diameter && *m.diameter <= 2);
        });
        r.claim("c5chord-ctr-below-n", "c5chord", g, "true", [&] { return text(c_tr_exact(g).value < g.order()); });
    }
    for (int k : {2, 3}) {
        auto g = friendship_graph(k);
        auto name = "friendship:" + std::to_string(k);
        r.claim("friendship-universal-ctr-below-n", name, g, "true",
                [&] { return text(metrics(g).has_universal_vertex && c_tr_exact(g).value < g.order()); });
    }
    return r.results;
}

namespace {
    // Bounds report on every graph the other suites touch, plus tightness of
    // the girth-7 bound on C_7 and C_9.
    auto verify_bounds(int max_n) -> std::vector<ClaimResult>
    {
        Recorder r;
        auto report = [&](const std::string & name, const Graph & g) {
            r.claim("bounds-report", name, g, "pass", [&] {
                auto b = bounds_report(g, c_tr_exact(g));
                std::string failed;
                for (const auto & e : b.entries)
                    if (! e.pass)
                        failed += (failed.empty() ? "" : ",") + e.id;
                return failed.empty() ? std::string("pass") : "fail: " + failed;
            });
        };

        for (int n = 2; n <= std::min(12, max_n); ++n)
            report("path:" + std::to_string(n), path_graph(n));
        for (int n = 3; n <= std::min(12, max_n); ++n)
            report("cycle:" + std::to_string(n), cycle_graph(n));
        for (int n = 4; n <= std::min(8, max_n); ++n)
            report("complete:" + std::to_string(n), complete_graph(n));
        for (int p = 2; p <= 4; ++p)
            for (int q = p; q <= 4 && p + q <= max_n; ++q)
                report("kbip:" + std::to_string(p) + "," + std::to_string(q), complete_bipartite_graph(p, q));
        for (int n = 3; n <= std::min(8, max_n); ++n)
            report("star:" + std::to_string(n), star_graph(n));
        for (int n = 3; n <= std::min(8, max_n); ++n)
            for (const auto & t : enumerate_trees(n))
                report("tree:" + std::to_string(n), t);
        for (int n = 2; n <= std::min(6, max_n); ++n)
            for (const auto & g : enumerate_connected_graphs(n))
                report("connected:" + std::to_string(n), g);
        if (max_n >= 8)
            report("figure1", figure1_graph());
        if (max_n >= 5) {
            report("c5chord", c5_chord_graph());
            report("friendship:2", friendship_graph(2));
        }
        if (max_n >= 7)
            report("friendship:3", friendship_graph(3));

        for (int n : {7, 9}) {
            if (n > max_n)
                continue;
            auto g = cycle_graph(n);
            r.claim("girth7-bound-tight", "cycle:" + std::to_string(n), g, "applicable,tight", [&] {
                auto b = bounds_report(g, c_tr_exact(g));
                const auto * e = b.find(bound_girth7);
                return std::string(e->applicable ? "applicable" : "not-applicable") + "," + (e->pass && e->tight ? "tight" : "loose");
            });
        }
        return r.results;
    }

    const std::map<std::string, int> suite_limits{
        {"paths", 12}, {"cycles", 12}, {"complete", 8}, {"gamma", 12}, {"trees", max_tree_catalog_order},
        {"catalog", 6}, {"named", 8}, {"bounds", 12}, {"all", 12},
    };
}

auto suite_names() -> const std::vector<std::string> &
{
    static const std::vector<std::string> names{"paths", "cycles", "complete", "gamma", "trees", "catalog", "named", "bounds", "all"};
    return names;
}

auto suite_max_order(const std::string & name) -> int
{
    auto it = suite_limits.find(name);
    if (it == suite_limits.end())
        throw std::invalid_argument("unknown suite \"" + name + "\"");
    return it->second;
}

auto run_suite(const std::string & name, int max_n) -> std::vector<ClaimResult>
{
    const int limit = suite_max_order(name);
    if (max_n > limit)
        throw std::invalid_argument("suite " + name + " supports --max-n <= " + std::to_string(limit));

    std::vector<ClaimResult> out;
    auto append = [&](std::vector<ClaimResult> more) { out.insert(out.end(), more.begin(), more.end()); };
    const bool all = name == "all";
    if ((all || name == "paths") && max_n >= 2)
        append(verify_paths(2, std::min(max_n, 12)));
    if ((all || name == "cycles") && max_n >= 3)
        append(verify_cycles(3, std::min(max_n, 12)));
    if ((all || name == "complete") && max_n >= 4)
        append(verify_complete_and_bipartite({4, std::min(max_n, 8), std::min(4, max_n / 2), 3, std::min(max_n, 8)}));
    if ((all || name == "gamma") && max_n >= 4)
        append(verify_gamma_closed_forms(std::min(max_n, 12)));
    if ((all || name == "trees") && max_n >= 3)
        append(verify_trees(std::min(max_n, max_tree_catalog_order)));
    if ((all || name == "catalog") && max_n >= 2)
        append(verify_catalog(std::min(max_n, 6)));
    if ((all || name == "named") && max_n >= 8)
        append(verify_named());
    if (all || name == "bounds")
        append(verify_bounds(max_n));
    return out;
}

} // namespace trc
