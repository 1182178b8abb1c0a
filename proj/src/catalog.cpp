#include "trc/catalog.hpp"

#include "trc/graph_io.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <unordered_set>

namespace trc {

namespace {
    // Colour refinement seeded with degrees. Colours are ranks of sorted
    // signatures, so the resulting ordered partition is isomorphism-invariant.
    auto refined_colours(const Graph & g) -> std::vector<int>
    {
        const int n = g.order();
        std::vector<int> colour(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            colour[static_cast<std::size_t>(v)] = g.degree(v);

        std::size_t classes = 0;
        while (true) {
            std::vector<std::vector<int>> signature(static_cast<std::size_t>(n));
            for (int v = 0; v < n; ++v) {
                auto & sig = signature[static_cast<std::size_t>(v)];
                g.neighbourhood(v).for_each([&](int w) { sig.push_back(colour[static_cast<std::size_t>(w)]); });
                std::ranges::sort(sig);
                sig.insert(sig.begin(), colour[static_cast<std::size_t>(v)]);
            }
            std::map<std::vector<int>, int> rank;
            for (const auto & sig : signature)
                rank.emplace(sig, 0);
            int next = 0;
            for (auto & [sig, r] : rank)
                r = next++;
            for (int v = 0; v < n; ++v)
                colour[static_cast<std::size_t>(v)] = rank[signature[static_cast<std::size_t>(v)]];
            if (rank.size() == classes)
                return colour;
            classes = rank.size();
        }
    }

    struct LabellingSearch {
        const Graph & g;
        int n;
        int total_bits;
        std::vector<int> cell_of_position;
        std::vector<int> colour;
        std::vector<int> placed;
        std::vector<bool> used;
        std::uint64_t best_code = 0;
        bool have_best = false;
        std::vector<int> best_placed;

        // Bits are emitted column by column (pairs (0,1), (0,2), (1,2), ...), so
        // placing position p fixes the next p bits of the code.
        void search(int position, std::uint64_t code, int bits, bool strictly_better)
        {
            if (position == n) {
                if (! have_best || code < best_code) {
                    best_code = code;
                    best_placed = placed;
                    have_best = true;
                }
                return;
            }
            for (int v = 0; v < n; ++v) {
                if (used[static_cast<std::size_t>(v)] || colour[static_cast<std::size_t>(v)] != cell_of_position[static_cast<std::size_t>(position)])
                    continue;
                std::uint64_t next = code;
                for (int i = 0; i < position; ++i)
                    next = (next << 1) | (g.adjacent(placed[static_cast<std::size_t>(i)], v) ? 1U : 0U);
                int next_bits = bits + position;
                bool better = strictly_better;
                if (have_best && ! strictly_better) {
                    auto best_prefix = next_bits == 0 ? 0 : best_code >> (total_bits - next_bits);
                    if (next > best_prefix)
                        continue;
                    better = next < best_prefix;
                }
                used[static_cast<std::size_t>(v)] = true;
                placed[static_cast<std::size_t>(position)] = v;
                search(position + 1, next, next_bits, better);
                used[static_cast<std::size_t>(v)] = false;
            }
        }
    };

    // Rooted-tree code as a balanced bit string: 1, the children's codes in
    // sorted order, then 0. Balanced strings are never proper prefixes of
    // each other, so comparing them left-aligned is a total order.
    struct TreeCode {
        std::uint32_t bits = 0;
        int length = 0;

        friend auto operator<(const TreeCode & a, const TreeCode & b) -> bool
        {
            int l = std::max(a.length, b.length);
            return (std::uint64_t{a.bits} << (l - a.length)) < (std::uint64_t{b.bits} << (l - b.length));
        }
    };

    constexpr int tree_fast_order = 16;

    struct SmallTree {
        int n;
        std::array<std::uint32_t, tree_fast_order> adj{};
    };

    auto rooted_code(const SmallTree & t, int v, int parent) -> TreeCode
    {
        std::array<TreeCode, tree_fast_order> children;
        int count = 0;
        for (auto b = t.adj[static_cast<std::size_t>(v)]; b != 0; b &= b - 1) {
            int w = std::countr_zero(b);
            if (w != parent)
                children[static_cast<std::size_t>(count++)] = rooted_code(t, w, v);
        }
        std::sort(children.begin(), children.begin() + count);
        TreeCode out{1, 1};
        for (int i = 0; i < count; ++i) {
            const auto & c = children[static_cast<std::size_t>(i)];
            out.bits = (out.bits << c.length) | c.bits;
            out.length += c.length;
        }
        out.bits <<= 1;
        ++out.length;
        return out;
    }

    // Centre-rooted code; a complete invariant for trees.
    auto tree_code(const SmallTree & t) -> std::uint64_t
    {
        std::array<int, tree_fast_order> degree{};
        std::array<int, tree_fast_order> layer{}, next{};
        int layer_size = 0;
        for (int v = 0; v < t.n; ++v) {
            degree[static_cast<std::size_t>(v)] = std::popcount(t.adj[static_cast<std::size_t>(v)]);
            if (degree[static_cast<std::size_t>(v)] <= 1)
                layer[static_cast<std::size_t>(layer_size++)] = v;
        }
        int remaining = t.n;
        while (remaining > 2) {
            remaining -= layer_size;
            int next_size = 0;
            for (int i = 0; i < layer_size; ++i)
                for (auto b = t.adj[static_cast<std::size_t>(layer[static_cast<std::size_t>(i)])]; b != 0; b &= b - 1) {
                    int w = std::countr_zero(b);
                    if (--degree[static_cast<std::size_t>(w)] == 1)
                        next[static_cast<std::size_t>(next_size++)] = w;
                }
            layer = next;
            layer_size = next_size;
        }

        auto best = rooted_code(t, layer[0], -1);
        if (layer_size == 2)
            best = std::min(best, rooted_code(t, layer[1], -1));
        return (std::uint64_t{best.bits} << 8) | static_cast<std::uint64_t>(best.length);
    }

    auto decode_pruefer(const std::vector<int> & seq) -> SmallTree
    {
        SmallTree t{static_cast<int>(seq.size()) + 2};
        std::array<int, tree_fast_order> degree;
        degree.fill(1);
        for (int a : seq)
            ++degree[static_cast<std::size_t>(a)];
        auto link = [&](int u, int v) {
            t.adj[static_cast<std::size_t>(u)] |= std::uint32_t{1} << v;
            t.adj[static_cast<std::size_t>(v)] |= std::uint32_t{1} << u;
        };
        for (int a : seq) {
            int leaf = 0;
            while (degree[static_cast<std::size_t>(leaf)] != 1)
                ++leaf;
            link(leaf, a);
            --degree[static_cast<std::size_t>(leaf)];
            --degree[static_cast<std::size_t>(a)];
        }
        int u = -1;
        for (int v = 0; v < t.n; ++v)
            if (degree[static_cast<std::size_t>(v)] == 1) {
                if (u < 0)
                    u = v;
                else
                    link(u, v);
            }
        return t;
    }
}

auto canonical_labelling(const Graph & g) -> std::vector<int>
{
    const int n = g.order();
    if (n > max_canonical_order)
        throw GraphError("canonical form supports order <= " + std::to_string(max_canonical_order) + ", got " + std::to_string(n));

    LabellingSearch s{g, n, n * (n - 1) / 2, {}, refined_colours(g), std::vector<int>(static_cast<std::size_t>(n)), std::vector<bool>(static_cast<std::size_t>(n)), 0, false, {}};
    s.cell_of_position = s.colour;
    std::ranges::sort(s.cell_of_position);
    s.search(0, 0, 0, false);

    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p)
        perm[static_cast<std::size_t>(s.best_placed[static_cast<std::size_t>(p)])] = p;
    return perm;
}

auto canonicalised(const Graph & g) -> Graph
{
    return g.relabel(canonical_labelling(g));
}

auto canonical_form(const Graph & g) -> std::string
{
    return encode_graph6(canonicalised(g));
}

auto enumerate_connected_graphs(int n) -> std::vector<Graph>
{
    if (n < 1 || n > max_connected_catalog_order)
        throw GraphError("connected graph enumeration supports 1 <= n <= " + std::to_string(max_connected_catalog_order));

    // Every connected graph has a non-cut vertex, so each class on k vertices
    // arises from a class on k-1 vertices plus one vertex with a nonempty
    // neighbourhood.
    std::vector<Graph> level{Graph::from_edge_list(1, std::vector<Edge>{})};
    for (int k = 2; k <= n; ++k) {
        std::map<std::string, Graph> next;
        for (const auto & h : level) {
            auto base = h.edges();
            for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (k - 1)); ++mask) {
                auto edges = base;
                for (int v = 0; v < k - 1; ++v)
                    if ((mask >> v) & 1U)
                        edges.emplace_back(v, k - 1);
                auto candidate = canonicalised(Graph::from_edge_list(k, edges));
                auto key = encode_graph6(candidate);
                next.try_emplace(std::move(key), std::move(candidate));
            }
        }
        level.clear();
        for (auto & [key, graph] : next)
            level.push_back(std::move(graph));
    }
    return level;
}

auto tree_from_pruefer(const std::vector<int> & seq) -> Graph
{
    const int n = static_cast<int>(seq.size()) + 2;
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int a : seq) {
        if (a < 0 || a >= n)
            throw GraphError("Pruefer entry " + std::to_string(a) + " out of range");
        ++degree[static_cast<std::size_t>(a)];
    }

    std::vector<Edge> edges;
    for (int a : seq) {
        int leaf = 0;
        while (degree[static_cast<std::size_t>(leaf)] != 1)
            ++leaf;
        edges.emplace_back(leaf, a);
        --degree[static_cast<std::size_t>(leaf)];
        --degree[static_cast<std::size_t>(a)];
    }
    int u = -1;
    for (int v = 0; v < n; ++v)
        if (degree[static_cast<std::size_t>(v)] == 1) {
            if (u < 0)
                u = v;
            else
                edges.emplace_back(u, v);
        }
    return Graph::from_edge_list(n, edges);
}

auto enumerate_trees(int n) -> std::vector<Graph>
{
    if (n < 2 || n > max_tree_catalog_order)
        throw GraphError("tree enumeration supports 2 <= n <= " + std::to_string(max_tree_catalog_order));

    std::unordered_set<std::uint64_t> seen;
    std::vector<Graph> representatives;
    std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
    while (true) {
        if (seen.insert(tree_code(decode_pruefer(seq))).second)
            representatives.push_back(tree_from_pruefer(seq));

        // odometer increment over [0, n)^(n-2)
        std::size_t i = 0;
        while (i < seq.size() && ++seq[i] == n)
            seq[i++] = 0;
        if (i == seq.size())
            break;
    }

    std::map<std::string, Graph> sorted;
    for (const auto & t : representatives) {
        auto c = canonicalised(t);
        sorted.try_emplace(encode_graph6(c), c);
    }
    std::vector<Graph> out;
    for (auto & [key, t] : sorted)
        out.push_back(std::move(t));
    return out;
}

} // namespace trc
