#include "trc/families.hpp"

#include <charconv>
#include <map>
#include <string>
#include <vector>

namespace trc {

namespace {
    void require(bool ok, const std::string & what)
    {
        if (! ok)
            throw GraphError(what);
    }
}

auto path_graph(int n) -> Graph
{
    require(n >= 1, "path needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return Graph::from_edge_list(n, edges);
}

auto cycle_graph(int n) -> Graph
{
    require(n >= 3, "cycle needs n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edge_list(n, edges);
}

auto complete_graph(int n) -> Graph
{
    require(n >= 1, "complete graph needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.emplace_back(i, j);
    return Graph::from_edge_list(n, edges);
}

auto complete_bipartite_graph(int p, int q) -> Graph
{
    require(p >= 1 && q >= 1, "complete bipartite graph needs p, q >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j)
            edges.emplace_back(i, p + j);
    return Graph::from_edge_list(p + q, edges);
}

auto star_graph(int n) -> Graph
{
    require(n >= 2, "star needs n >= 2");
    return complete_bipartite_graph(1, n - 1);
}

auto double_star_graph(int a, int b) -> Graph
{
    require(a >= 1 && b >= 1, "double star needs a, b >= 1");
    std::vector<Edge> edges{{0, 1}};
    for (int i = 0; i < a; ++i)
        edges.emplace_back(0, 2 + i);
    for (int j = 0; j < b; ++j)
        edges.emplace_back(1, 2 + a + j);
    return Graph::from_edge_list(a + b + 2, edges);
}

auto friendship_graph(int k) -> Graph
{
    require(k >= 2, "friendship graph needs k >= 2");
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i) {
        int a = 2 * i + 1, b = 2 * i + 2;
        edges.insert(edges.end(), {{0, a}, {0, b}, {a, b}});
    }
    return Graph::from_edge_list(2 * k + 1, edges);
}

auto c5_chord_graph() -> Graph
{
    return Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {1, 4}});
}

auto figure1_graph() -> Graph
{
    return Graph::from_edge_list(8, {{0, 4}, {2, 4}, {0, 2}, {0, 1}, {1, 3}, {3, 2}, {3, 5}, {5, 1}, {4, 6}, {6, 5}, {6, 7}});
}

auto family(FamilyKind kind, std::span<const int> params) -> Graph
{
    auto expect = [&](std::size_t count) {
        require(params.size() == count,
                "family expects " + std::to_string(count) + " parameter(s), got " + std::to_string(params.size()));
    };

    switch (kind) {
    case FamilyKind::path: expect(1); return path_graph(params[0]);
    case FamilyKind::cycle: expect(1); return cycle_graph(params[0]);
    case FamilyKind::complete: expect(1); return complete_graph(params[0]);
    case FamilyKind::complete_bipartite: expect(2); return complete_bipartite_graph(params[0], params[1]);
    case FamilyKind::star: expect(1); return star_graph(params[0]);
    case FamilyKind::double_star: expect(2); return double_star_graph(params[0], params[1]);
    case FamilyKind::friendship: expect(1); return friendship_graph(params[0]);
    case FamilyKind::c5_chord: expect(0); return c5_chord_graph();
    case FamilyKind::figure1: expect(0); return figure1_graph();
    }
    throw GraphError("unknown family");
}

auto family_from_dsl(std::string_view dsl) -> Graph
{
    static const std::map<std::string, FamilyKind, std::less<>> names{
        {"path", FamilyKind::path},
        {"cycle", FamilyKind::cycle},
        {"complete", FamilyKind::complete},
        {"kbip", FamilyKind::complete_bipartite},
        {"star", FamilyKind::star},
        {"dstar", FamilyKind::double_star},
        {"friendship", FamilyKind::friendship},
        {"c5chord", FamilyKind::c5_chord},
        {"figure1", FamilyKind::figure1},
    };

    auto colon = dsl.find(':');
    auto name = dsl.substr(0, colon);
    auto it = names.find(name);
    if (it == names.end())
        throw GraphError("unknown family \"" + std::string(name) + "\"");

    std::vector<int> params;
    if (colon != std::string_view::npos) {
        auto rest = dsl.substr(colon + 1);
        while (true) {
            auto comma = rest.find(',');
            auto token = rest.substr(0, comma);
            int value = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
                throw GraphError("bad family parameter \"" + std::string(token) + "\" in \"" + std::string(dsl) + "\"");
            params.push_back(value);
            if (comma == std::string_view::npos)
                break;
            rest = rest.substr(comma + 1);
        }
    }
    return family(it->second, params);
}

} // namespace trc
