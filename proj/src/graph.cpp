#include "trc/graph.hpp"

#include <algorithm>

namespace trc {

namespace {
    auto pair_text(const Edge & e) -> std::string
    {
        return "(" + std::to_string(e.first) + ", " + std::to_string(e.second) + ")";
    }
}

auto Graph::from_edge_list(int n, std::span<const Edge> edges) -> Graph
{
    if (n < 1 || n > max_order)
        throw GraphError("graph order must be in [1, " + std::to_string(max_order) + "], got " + std::to_string(n));

    std::vector<VertexSet> neighbours(static_cast<std::size_t>(n), VertexSet(n));
    for (const auto & e : edges) {
        auto [u, v] = e;
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw GraphError("edge " + pair_text(e) + " has an endpoint outside [0, " + std::to_string(n) + ")");
        if (u == v)
            throw GraphError("edge " + pair_text(e) + " is a self-loop");
        neighbours[static_cast<std::size_t>(u)].insert(v);
        neighbours[static_cast<std::size_t>(v)].insert(u);
    }

    int degree_sum = 0;
    for (const auto & nb : neighbours)
        degree_sum += nb.size();
    return Graph(std::move(neighbours), degree_sum / 2);
}

auto Graph::min_degree() const -> int
{
    int result = order();
    for (const auto & nb : neighbours_)
        result = std::min(result, nb.size());
    return result;
}

auto Graph::max_degree() const -> int
{
    int result = 0;
    for (const auto & nb : neighbours_)
        result = std::max(result, nb.size());
    return result;
}

auto Graph::edges() const -> std::vector<Edge>
{
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int u = 0; u < order(); ++u)
        neighbourhood(u).for_each([&](int v) {
            if (u < v)
                out.emplace_back(u, v);
        });
    return out;
}

auto Graph::relabel(std::span<const int> perm) const -> Graph
{
    if (static_cast<int>(perm.size()) != order())
        throw GraphError("relabelling permutation has wrong length");
    std::vector<bool> seen(perm.size(), false);
    for (int p : perm) {
        if (p < 0 || p >= order() || seen[static_cast<std::size_t>(p)])
            throw GraphError("relabelling is not a permutation");
        seen[static_cast<std::size_t>(p)] = true;
    }

    auto old_edges = edges();
    for (auto & [u, v] : old_edges) {
        u = perm[static_cast<std::size_t>(u)];
        v = perm[static_cast<std::size_t>(v)];
    }
    return from_edge_list(order(), old_edges);
}

} // namespace trc
