#include "trc/domination.hpp"

#include "trc/detail/block_search.hpp"

#include <optional>
#include <string>
#include <vector>

namespace trc {

auto to_string(DominationKind kind) -> const char *
{
    switch (kind) {
    case DominationKind::dominating: return "dominating";
    case DominationKind::total: return "total";
    case DominationKind::total_restrained: return "total_restrained";
    }
    return "?";
}

auto is_dominating(const Graph & g, const VertexSet & s) -> bool
{
    for (int v = 0; v < g.order(); ++v)
        if (! s.contains(v) && ! g.neighbourhood(v).intersects(s))
            return false;
    return true;
}

auto is_total_dominating(const Graph & g, const VertexSet & s) -> bool
{
    for (int v = 0; v < g.order(); ++v)
        if (! g.neighbourhood(v).intersects(s))
            return false;
    return true;
}

auto is_trd_set(const Graph & g, const VertexSet & s) -> bool
{
    const auto outside = s.complement();
    for (int v = 0; v < g.order(); ++v) {
        const auto & nb = g.neighbourhood(v);
        if (! nb.intersects(s))
            return false;
        if (! s.contains(v) && ! nb.intersects(outside))
            return false;
    }
    return true;
}

auto satisfies(const Graph & g, const VertexSet & s, DominationKind kind) -> bool
{
    switch (kind) {
    case DominationKind::dominating: return is_dominating(g, s);
    case DominationKind::total: return is_total_dominating(g, s);
    case DominationKind::total_restrained: return is_trd_set(g, s);
    }
    return false;
}

namespace {
    // Visits subsets of `universe` of size `size` in lexicographic order of
    // their sorted member lists; stops when visit returns true.
    template <typename Visit>
    auto first_subset_of_size(const std::vector<int> & universe, int order, int size, Visit && visit) -> std::optional<VertexSet>
    {
        const int m = static_cast<int>(universe.size());
        if (size > m)
            return std::nullopt;
        std::vector<int> idx(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i)
            idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            VertexSet s(order);
            for (int i : idx)
                s.insert(universe[static_cast<std::size_t>(i)]);
            if (visit(s))
                return s;

            int i = size - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - size + i)
                --i;
            if (i < 0)
                return std::nullopt;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < size; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }

    void require_isolate_free(const Graph & g, const char * what)
    {
        if (g.has_isolated_vertex())
            throw NoSolutionError(std::string(what) + " is undefined for a graph with an isolated vertex");
    }
}

auto gamma(const Graph & g, DominationKind kind) -> GammaResult
{
    if (kind != DominationKind::dominating)
        require_isolate_free(g, to_string(kind));

    const auto universe = g.vertices().members();
    for (int size = 0; size <= g.order(); ++size)
        if (auto s = first_subset_of_size(universe, g.order(), size, [&](const VertexSet & c) { return satisfies(g, c, kind); }))
            return {size, *s};
    throw NoSolutionError("no set of the requested kind exists");
}

auto gamma_tr_closed_form(FamilyKind kind, std::span<const int> params) -> int
{
    auto param = [&](std::size_t i) {
        if (i >= params.size())
            throw std::domain_error("missing family parameter");
        return params[i];
    };
    auto need = [](bool ok, const char * what) {
        if (! ok)
            throw std::domain_error(what);
    };

    switch (kind) {
    case FamilyKind::path: {
        int n = param(0);
        need(n >= 4, "path closed form needs n >= 4");
        return n - 2 * ((n - 2) / 4);
    }
    case FamilyKind::cycle: {
        int n = param(0);
        need(n >= 4, "cycle closed form needs n >= 4");
        return n - 2 * (n / 4);
    }
    case FamilyKind::complete:
        need(param(0) >= 4, "complete graph closed form needs n >= 4");
        return 2;
    case FamilyKind::complete_bipartite:
        need(std::min(param(0), param(1)) >= 2, "complete bipartite closed form needs min(p, q) >= 2");
        return 2;
    case FamilyKind::star: {
        int n = param(0);
        need(n >= 2, "star closed form needs n >= 2");
        return n;
    }
    default:
        throw std::domain_error("no closed form for this family");
    }
}

auto domatic(const Graph & g, DominationKind kind) -> DomaticResult
{
    if (kind == DominationKind::dominating)
        throw std::invalid_argument("domatic supports the total and total_restrained kinds");
    require_isolate_free(g, "domatic number");

    // Merging two blocks of a feasible k-partition keeps every block
    // feasible, so the search can stop at the first infeasible k. Each block
    // must contain a neighbour of a minimum-degree vertex, hence k <= delta.
    const int n = g.order();
    std::optional<Partition> best;
    for (int k = 1; k <= g.min_degree(); ++k) {
        std::optional<Partition> found;
        detail::KBlockSearch search(n, k, [&](std::span<const VertexSet> blocks) {
            for (const auto & b : blocks)
                if (! satisfies(g, b, kind))
                    return false;
            found.emplace(n, std::vector<VertexSet>(blocks.begin(), blocks.end()));
            return true;
        });
        search.run();
        if (! found)
            break;
        best = std::move(found);
    }
    if (! best)
        throw NoSolutionError("vertex set is not a set of the requested kind");
    return {best->size(), *best, true};
}

auto is_minimal_trd(const Graph & g, const VertexSet & s) -> bool
{
    if (! is_trd_set(g, s))
        return false;
    const auto members = s.members();
    for (int size = 0; size < s.size(); ++size)
        if (first_subset_of_size(members, g.order(), size, [&](const VertexSet & c) { return is_trd_set(g, c); }))
            return false;
    return true;
}

auto shrink_to_minimal_trd(const Graph & g, const VertexSet & s) -> VertexSet
{
    if (! is_trd_set(g, s))
        throw std::invalid_argument("shrink_to_minimal_trd: " + s.to_string() + " is not a TRD-set");

    auto current = s;
    bool removed = true;
    while (removed) {
        removed = false;
        for (int v : current.members()) {
            auto candidate = current;
            candidate.erase(v);
            if (is_trd_set(g, candidate)) {
                current = candidate;
                removed = true;
                break;
            }
        }
    }

    const auto members = current.members();
    for (int size = 0; size < current.size(); ++size)
        if (auto smaller = first_subset_of_size(members, g.order(), size, [&](const VertexSet & c) { return is_trd_set(g, c); }))
            return *smaller;
    return current;
}

} // namespace trc
