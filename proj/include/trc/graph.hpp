#pragma once

#include "trc/vertex_set.hpp"

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace trc {

using Edge = std::pair<int, int>;

/// Raised when a graph cannot be built from the given input.
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
public:
    /// Builds the graph with exactly the given edges. Duplicates (in either
    /// orientation) are merged; self-loops and out-of-range endpoints throw
    /// GraphError naming the offending pair.
    static auto from_edge_list(int n, std::span<const Edge> edges) -> Graph;
    static auto from_edge_list(int n, std::initializer_list<Edge> edges) -> Graph
    {
        return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    [[nodiscard]] auto order() const -> int { return static_cast<int>(neighbours_.size()); }
    [[nodiscard]] auto edge_count() const -> int { return edge_count_; }

    [[nodiscard]] auto neighbourhood(int v) const -> const VertexSet & { return neighbours_.at(static_cast<std::size_t>(v)); }
    [[nodiscard]] auto closed_neighbourhood(int v) const -> VertexSet
    {
        auto s = neighbourhood(v);
        s.insert(v);
        return s;
    }

    [[nodiscard]] auto degree(int v) const -> int { return neighbourhood(v).size(); }
    [[nodiscard]] auto min_degree() const -> int;
    [[nodiscard]] auto max_degree() const -> int;
    [[nodiscard]] auto adjacent(int u, int v) const -> bool { return neighbourhood(u).contains(v); }
    [[nodiscard]] auto has_isolated_vertex() const -> bool { return min_degree() == 0; }

    [[nodiscard]] auto vertices() const -> VertexSet { return VertexSet::full(order()); }

    /// Edges (u, v) with u < v, sorted.
    [[nodiscard]] auto edges() const -> std::vector<Edge>;

    /// The graph with vertex v renamed to perm[v].
    [[nodiscard]] auto relabel(std::span<const int> perm) const -> Graph;

    friend auto operator==(const Graph &, const Graph &) -> bool = default;

private:
    explicit Graph(std::vector<VertexSet> neighbours, int edge_count) :
        neighbours_(std::move(neighbours)), edge_count_(edge_count)
    {
    }

    std::vector<VertexSet> neighbours_;
    int edge_count_ = 0;
};

} // namespace trc
