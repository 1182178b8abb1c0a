#include "trc/metrics.hpp"

#include <algorithm>
#include <queue>

namespace trc {

auto bfs_distances(const Graph & g, int source) -> std::vector<int>
{
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    std::queue<int> frontier;
    dist[static_cast<std::size_t>(source)] = 0;
    frontier.push(source);
    while (! frontier.empty()) {
        int u = frontier.front();
        frontier.pop();
        g.neighbourhood(u).for_each([&](int w) {
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                frontier.push(w);
            }
        });
    }
    return dist;
}

auto is_connected(const Graph & g) -> bool
{
    auto dist = bfs_distances(g, 0);
    return std::ranges::none_of(dist, [](int d) { return d < 0; });
}

namespace {
    // Shortest cycle through the BFS tree rooted at root; the minimum over all
    // roots is the girth.
    auto shortest_cycle_from(const Graph & g, int root) -> std::optional<int>
    {
        const auto n = static_cast<std::size_t>(g.order());
        std::vector<int> dist(n, -1), parent(n, -1);
        std::queue<int> frontier;
        dist[static_cast<std::size_t>(root)] = 0;
        frontier.push(root);
        std::optional<int> best;
        while (! frontier.empty()) {
            int u = frontier.front();
            frontier.pop();
            g.neighbourhood(u).for_each([&](int w) {
                auto wi = static_cast<std::size_t>(w), ui = static_cast<std::size_t>(u);
                if (dist[wi] < 0) {
                    dist[wi] = dist[ui] + 1;
                    parent[wi] = u;
                    frontier.push(w);
                }
                else if (parent[ui] != w) {
                    int length = dist[ui] + dist[wi] + 1;
                    if (! best || length < *best)
                        best = length;
                }
            });
        }
        return best;
    }
}

auto metrics(const Graph & g) -> GraphMetrics
{
    GraphMetrics m;
    const int n = g.order();
    m.min_degree = g.min_degree();
    m.max_degree = g.max_degree();
    m.has_universal_vertex = m.max_degree == n - 1;

    int diameter = 0;
    m.connected = true;
    for (int v = 0; v < n; ++v) {
        for (int d : bfs_distances(g, v)) {
            if (d < 0)
                m.connected = false;
            diameter = std::max(diameter, d);
        }
        if (auto c = shortest_cycle_from(g, v); c && (! m.girth || *c < *m.girth))
            m.girth = c;
    }
    if (m.connected)
        m.diameter = diameter;
    m.triangle_free = ! m.girth || *m.girth > 3;

    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 1)
            m.leaves.push_back({v, g.neighbourhood(v).first()});
    return m;
}

} // namespace trc
