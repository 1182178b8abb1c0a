#pragma once

#include "trc/graph.hpp"

#include <optional>
#include <vector>

namespace trc {

struct Leaf {
    int vertex;
    int support;

    friend auto operator==(const Leaf &, const Leaf &) -> bool = default;
};

struct GraphMetrics {
    /// Shortest cycle length; empty for acyclic graphs.
    std::optional<int> girth;
    /// Maximum eccentricity; empty for disconnected graphs. 0 for K_1.
    std::optional<int> diameter;
    bool connected = false;
    bool triangle_free = false;
    bool has_universal_vertex = false;
    int min_degree = 0;
    int max_degree = 0;
    std::vector<Leaf> leaves;
};

auto metrics(const Graph & g) -> GraphMetrics;

/// Unweighted distances from source; -1 for unreachable vertices.
auto bfs_distances(const Graph & g, int source) -> std::vector<int>;

auto is_connected(const Graph & g) -> bool;

} // namespace trc
