#include "trc/coalition.hpp"

#include "trc/detail/block_search.hpp"
#include "trc/domination.hpp"

#include <algorithm>
#include <stdexcept>

namespace trc {

namespace {
    // Validity of a complete assignment, without building a Partition.
    auto valid_blocks(const Graph & g, std::span<const VertexSet> blocks) -> bool
    {
        const auto k = blocks.size();
        for (const auto & b : blocks)
            if (is_trd_set(g, b))
                return false;

        std::vector<bool> has_partner(k, false);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j)
                if ((! has_partner[i] || ! has_partner[j]) && is_trd_set(g, blocks[i] | blocks[j]))
                    has_partner[i] = has_partner[j] = true;
        return std::ranges::all_of(has_partner, [](bool b) { return b; });
    }

    // {lowest member}, rest
    auto split(const VertexSet & s) -> std::pair<VertexSet, VertexSet>
    {
        VertexSet low(s.order());
        low.insert(s.first());
        return {low, s - low};
    }
}

auto forms_coalition(const Graph & g, const VertexSet & x, const VertexSet & y) -> bool
{
    if (x.empty() || y.empty())
        throw std::invalid_argument("forms_coalition: sets must be nonempty");
    if (x.intersects(y))
        throw std::invalid_argument("forms_coalition: sets " + x.to_string() + " and " + y.to_string() + " overlap");
    return ! is_trd_set(g, x) && ! is_trd_set(g, y) && is_trd_set(g, x | y);
}

auto check_trc_partition(const Graph & g, const Partition & p) -> TrcValidation
{
    if (p.order() != g.order())
        throw PartitionError("partition order does not match graph order");

    TrcValidation out;
    out.blocks.resize(static_cast<std::size_t>(p.size()));
    for (int i = 0; i < p.size(); ++i)
        out.blocks[static_cast<std::size_t>(i)].is_trd = is_trd_set(g, p.block(i));

    out.valid = true;
    for (int i = 0; i < p.size(); ++i) {
        auto & diag = out.blocks[static_cast<std::size_t>(i)];
        for (int j = 0; j < p.size(); ++j)
            if (j != i && ! diag.is_trd && ! out.blocks[static_cast<std::size_t>(j)].is_trd && is_trd_set(g, p.block(i) | p.block(j)))
                diag.partners.push_back(j);
        if (diag.is_trd || diag.partners.empty())
            out.valid = false;
    }
    return out;
}

auto is_trc_partition(const Graph & g, const Partition & p) -> bool
{
    return check_trc_partition(g, p).valid;
}

auto coalition_partners(const Graph & g, const Partition & p, int i) -> std::vector<int>
{
    if (i < 0 || i >= p.size())
        throw std::out_of_range("block index " + std::to_string(i) + " out of range");
    std::vector<int> out;
    for (int j = 0; j < p.size(); ++j)
        if (j != i && forms_coalition(g, p.block(i), p.block(j)))
            out.push_back(j);
    return out;
}

auto build_trcg(const Graph & g, const Partition & p) -> Graph
{
    auto check = check_trc_partition(g, p);
    if (! check.valid)
        throw std::invalid_argument("build_trcg: " + p.to_string() + " is not a trc-partition");
    std::vector<Edge> edges;
    for (int i = 0; i < p.size(); ++i)
        for (int j : check.blocks[static_cast<std::size_t>(i)].partners)
            if (i < j)
                edges.emplace_back(i, j);
    return Graph::from_edge_list(p.size(), edges);
}

auto search_upper_bound(const Graph & g) -> int
{
    const int n = g.order(), delta = g.min_degree(), big_delta = g.max_degree();
    if (delta == 1)
        return std::min(n, big_delta + 1);
    if (delta == 2)
        return std::min(n, 2 * big_delta);
    return n;
}

auto c_tr_exact(const Graph & g, SolveMode mode) -> TrcSolveResult
{
    TrcSolveResult result;
    result.exhaustive = true;
    if (g.has_isolated_vertex())
        return result;

    const int n = g.order();
    if (mode == SolveMode::oracle) {
        std::vector<int> rgs(static_cast<std::size_t>(n), 0);
        std::vector<VertexSet> blocks;
        do {
            ++result.nodes;
            int k = *std::ranges::max_element(rgs) + 1;
            if (k <= result.value)
                continue;
            blocks.assign(static_cast<std::size_t>(k), VertexSet(n));
            for (int v = 0; v < n; ++v)
                blocks[static_cast<std::size_t>(rgs[static_cast<std::size_t>(v)])].insert(v);
            if (valid_blocks(g, blocks)) {
                result.value = k;
                result.witness.emplace(n, blocks);
            }
        } while (next_restricted_growth(rgs));
        return result;
    }

    for (int k = search_upper_bound(g); k >= 2; --k) {
        std::optional<Partition> found;
        detail::KBlockSearch search(n, k, [&](std::span<const VertexSet> blocks) {
            if (! valid_blocks(g, blocks))
                return false;
            found.emplace(n, std::vector<VertexSet>(blocks.begin(), blocks.end()));
            return true;
        });
        search.run();
        result.nodes += search.nodes();
        if (found) {
            result.value = k;
            result.witness = std::move(found);
            return result;
        }
    }
    throw std::logic_error("isolate-free graph without a trc-partition");
}

auto constructive_lower_bound(const Graph & g) -> Partition
{
    auto domatic_partition = domatic(g, DominationKind::total_restrained).witness;
    std::vector<VertexSet> sets = domatic_partition.blocks();
    auto & last = sets.back();

    for (std::size_t i = 0; i + 1 < sets.size(); ++i) {
        auto core = shrink_to_minimal_trd(g, sets[i]);
        last |= sets[i] - core;
        sets[i] = core;
    }

    std::vector<VertexSet> phi;
    for (std::size_t i = 0; i + 1 < sets.size(); ++i) {
        auto [a, b] = split(sets[i]);
        phi.push_back(a);
        phi.push_back(b);
    }

    if (is_minimal_trd(g, last)) {
        auto [a, b] = split(last);
        phi.push_back(a);
        phi.push_back(b);
    }
    else {
        auto core = shrink_to_minimal_trd(g, last);
        auto residue = last - core;
        auto [a, b] = split(core);
        phi.push_back(a);
        bool residue_joins = std::ranges::any_of(phi, [&](const VertexSet & block) {
            return forms_coalition(g, residue, block);
        }) || forms_coalition(g, residue, b);
        if (residue_joins) {
            phi.push_back(b);
            phi.push_back(residue);
        }
        else
            phi.push_back(b | residue);
    }
    return Partition(g.order(), std::move(phi));
}

} // namespace trc
