#include "oracles.hpp"

#include "trc/catalog.hpp"
#include "trc/families.hpp"
#include "trc/graph_io.hpp"
#include "trc/metrics.hpp"

#include <doctest.h>

#include <fstream>
#include <random>
#include <set>
#include <sstream>

using namespace trc;

TEST_SUITE("graph-core") {

TEST_CASE("from_edge_list builds, deduplicates and rejects bad pairs")
{
    auto c3 = Graph::from_edge_list(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(c3.edge_count() == 3);
    CHECK(c3 == cycle_graph(3));

    auto p2 = Graph::from_edge_list(2, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(p2.edge_count() == 1);
    CHECK(p2.adjacent(1, 0));

    CHECK_THROWS_WITH_AS(Graph::from_edge_list(3, {{0, 3}}), doctest::Contains("(0, 3)"), GraphError);
    CHECK_THROWS_WITH_AS(Graph::from_edge_list(3, {{1, 1}}), doctest::Contains("self-loop"), GraphError);
    CHECK_THROWS_AS(Graph::from_edge_list(0, {}), GraphError);
}

TEST_CASE("figure1 graph has the documented degrees")
{
    auto g = figure1_graph();
    REQUIRE(g.order() == 8);
    CHECK(g.edge_count() == 11);
    for (int v = 0; v < 7; ++v)
        CHECK(g.degree(v) == 3);
    CHECK(g.degree(7) == 1);
}

TEST_CASE("families follow the documented labelling")
{
    CHECK(cycle_graph(5).edges() == std::vector<Edge>{{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}});
    CHECK(double_star_graph(1, 1) == path_graph(4).relabel(std::vector<int>{2, 0, 1, 3}));
    CHECK(canonical_form(double_star_graph(1, 1)) == canonical_form(path_graph(4)));

    auto f2 = friendship_graph(2);
    CHECK(f2.order() == 5);
    CHECK(f2.degree(0) == 4);
    for (int v = 1; v < 5; ++v)
        CHECK(f2.degree(v) == 2);

    auto s = star_graph(6);
    CHECK(s.degree(0) == 5);
    auto ds = double_star_graph(3, 2);
    CHECK(ds.degree(0) == 4);
    CHECK(ds.degree(1) == 3);

    CHECK_THROWS_AS(cycle_graph(2), GraphError);
    CHECK_THROWS_AS(star_graph(1), GraphError);
    CHECK_THROWS_AS(friendship_graph(1), GraphError);
    CHECK_THROWS_AS(complete_bipartite_graph(0, 3), GraphError);
    CHECK_THROWS_AS(double_star_graph(0, 1), GraphError);
}

TEST_CASE("family edge counts")
{
    for (int n = 1; n <= 12; ++n) {
        CHECK(path_graph(n).edge_count() == n - 1);
        CHECK(complete_graph(n).edge_count() == n * (n - 1) / 2);
    }
    for (int n = 3; n <= 12; ++n)
        CHECK(cycle_graph(n).edge_count() == n);
    for (int p = 1; p <= 5; ++p)
        for (int q = 1; q <= 5; ++q)
            CHECK(complete_bipartite_graph(p, q).edge_count() == p * q);
    for (int k = 2; k <= 6; ++k)
        CHECK(friendship_graph(k).edge_count() == 3 * k);
}

TEST_CASE("family DSL")
{
    CHECK(family_from_dsl("path:8") == path_graph(8));
    CHECK(family_from_dsl("cycle:12") == cycle_graph(12));
    CHECK(family_from_dsl("kbip:3,4") == complete_bipartite_graph(3, 4));
    CHECK(family_from_dsl("star:7") == star_graph(7));
    CHECK(family_from_dsl("dstar:5,1") == double_star_graph(5, 1));
    CHECK(family_from_dsl("friendship:3") == friendship_graph(3));
    CHECK(family_from_dsl("c5chord") == c5_chord_graph());
    CHECK(family_from_dsl("figure1") == figure1_graph());
    CHECK(family_from_dsl("complete:5") == complete_graph(5));

    CHECK_THROWS_AS(family_from_dsl("hypercube:3"), GraphError);
    CHECK_THROWS_AS(family_from_dsl("path:"), GraphError);
    CHECK_THROWS_AS(family_from_dsl("path:x"), GraphError);
    CHECK_THROWS_AS(family_from_dsl("kbip:3"), GraphError);
    CHECK_THROWS_AS(family_from_dsl("figure1:2"), GraphError);
}

TEST_CASE("graph6 decode and encode")
{
    auto g = parse_graph6("D?{");
    CHECK(g.order() == 5);
    CHECK(encode_graph6(g) == "D?{");
    // star with centre 4
    CHECK(g.degree(4) == 4);

    CHECK(encode_graph6(cycle_graph(3)) == "Bw");
    CHECK(parse_graph6(encode_graph6(cycle_graph(3))) == cycle_graph(3));
    CHECK(encode_graph6(path_graph(4)) == "Ch");
    CHECK(encode_graph6(cycle_graph(8)) == "GhCGKC");
    CHECK(encode_graph6(complete_bipartite_graph(2, 3)) == "D]o");
    CHECK(parse_graph6(">>graph6<<Bw\n") == cycle_graph(3));
    CHECK(parse_graph6("@") == Graph::from_edge_list(1, std::vector<Edge>{}));

    auto big = path_graph(64);
    auto encoded = encode_graph6(big);
    CHECK(encoded.substr(0, 4) == "~?@?");
    CHECK(parse_graph6(encoded) == big);
}

TEST_CASE("graph6 errors carry byte offsets")
{
    auto offset_of = [](std::string_view text) -> std::size_t {
        try {
            parse_graph6(text);
        }
        catch (const ParseError & e) {
            return e.position();
        }
        return std::string::npos;
    };
    CHECK(offset_of("D?") == 2);         // truncated bit vector
    CHECK(offset_of("D? {") == 2);       // byte 32 is not printable graph6
    CHECK(offset_of("") == 0);
    CHECK(offset_of("Bww") == 2);        // trailing data
    CHECK(offset_of("?") == 0);          // order 0
}

TEST_CASE("graph6 round-trips over the catalogs")
{
    for (int n = 1; n <= 6; ++n)
        for (const auto & g : enumerate_connected_graphs(n))
            CHECK(parse_graph6(encode_graph6(g)) == g);
    for (int n = 2; n <= 8; ++n)
        for (const auto & t : enumerate_trees(n))
            CHECK(parse_graph6(encode_graph6(t)) == t);
}

TEST_CASE("externally generated connected 6-vertex graphs")
{
    std::ifstream file(TRC_TEST_DATA_DIR "/connected6.g6");
    REQUIRE(file);
    std::set<std::string> keys;
    std::string line;
    int count = 0;
    while (std::getline(file, line)) {
        auto g = parse_graph6(line);
        CHECK(g.order() == 6);
        CHECK(is_connected(g));
        keys.insert(canonical_form(g));
        ++count;
    }
    CHECK(count == 112);
    CHECK(keys.size() == 112);

    std::set<std::string> internal;
    for (const auto & g : enumerate_connected_graphs(6))
        internal.insert(canonical_form(g));
    CHECK(internal == keys);
}

TEST_CASE("edge list parsing")
{
    std::istringstream ok("3 2\n0 1\n\n1 2\n");
    CHECK(parse_edge_list(ok) == path_graph(3));

    auto line_of = [](const std::string & text) -> std::size_t {
        std::istringstream in(text);
        try {
            parse_edge_list(in);
        }
        catch (const ParseError & e) {
            return e.position();
        }
        return 0;
    };
    CHECK(line_of("3 2\n0 1\n") == 3);
    CHECK(line_of("3 2\n0 1\n1 x\n") == 3);
    CHECK(line_of("3 1\n0 3\n") == 2);
    CHECK(line_of("3\n") == 1);
    CHECK(line_of("3 1\n0 1\n1 2\n") == 3);
}

TEST_CASE("metrics")
{
    auto c7 = metrics(cycle_graph(7));
    CHECK(c7.girth == 7);
    CHECK(c7.diameter == 3);
    CHECK(c7.connected);
    CHECK(c7.triangle_free);
    CHECK_FALSE(c7.has_universal_vertex);

    auto k4 = metrics(complete_graph(4));
    CHECK(k4.girth == 3);
    CHECK(k4.diameter == 1);
    CHECK(k4.has_universal_vertex);

    auto chord = metrics(c5_chord_graph());
    CHECK(chord.girth == 3);
    CHECK(chord.diameter == 2);
    CHECK(chord.min_degree == 2);

    auto p5 = metrics(path_graph(5));
    CHECK_FALSE(p5.girth.has_value());
    CHECK(p5.leaves == std::vector<Leaf>{{0, 1}, {4, 3}});

    auto split = metrics(Graph::from_edge_list(4, {{0, 1}, {2, 3}}));
    CHECK_FALSE(split.connected);
    CHECK_FALSE(split.diameter.has_value());

    auto k1 = metrics(complete_graph(1));
    CHECK(k1.diameter == 0);
    CHECK(k1.has_universal_vertex);

    for (int n = 3; n <= 12; ++n)
        CHECK(metrics(cycle_graph(n)).girth == n);
    for (int n = 2; n <= 8; ++n)
        for (const auto & t : enumerate_trees(n))
            CHECK_FALSE(metrics(t).girth.has_value());
    CHECK(metrics(complete_bipartite_graph(3, 3)).girth == 4);
    CHECK(metrics(Graph::from_edge_list(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})).girth == 3);
}

TEST_CASE("metrics flags agree with degrees across the catalog")
{
    for (int n = 2; n <= 6; ++n)
        for (const auto & g : enumerate_connected_graphs(n)) {
            auto m = metrics(g);
            CHECK(m.has_universal_vertex == (g.max_degree() == n - 1));
            CHECK(*m.diameter >= 1);
            if (m.girth)
                CHECK(*m.girth >= 3);
        }
}

TEST_CASE("canonical form")
{
    auto p4 = path_graph(4);
    auto relabelled = Graph::from_edge_list(4, {{2, 0}, {0, 3}, {3, 1}});
    CHECK(canonical_form(p4) == canonical_form(relabelled));
    CHECK(canonical_form(star_graph(4)) != canonical_form(p4));

    std::set<std::string> keys;
    for (const auto & g : oracle::all_labelled_graphs(4))
        if (g.edge_count() == 3)
            keys.insert(canonical_form(g));
    CHECK(keys.size() == 3);

    CHECK_THROWS_AS(canonical_form(path_graph(11)), GraphError);
    CHECK_NOTHROW(canonical_form(cycle_graph(10)));
}

TEST_CASE("canonical form is invariant under random relabelling")
{
    std::mt19937 rng(20261014);
    for (int n = 1; n <= 7; ++n)
        for (const auto & g : enumerate_connected_graphs(n)) {
            const auto key = canonical_form(g);
            std::vector<int> perm(static_cast<std::size_t>(n));
            std::iota(perm.begin(), perm.end(), 0);
            for (int round = 0; round < (n <= 6 ? 100 : 10); ++round) {
                std::shuffle(perm.begin(), perm.end(), rng);
                if (canonical_form(g.relabel(perm)) != key) {
                    FAIL("relabelling changed the key of " << encode_graph6(g));
                    return;
                }
            }
        }
}

TEST_CASE("canonical form separates exactly the brute-force classes (n <= 6)")
{
    for (int n = 1; n <= 6; ++n) {
        std::set<std::string> brute, ours;
        std::set<std::pair<std::string, std::string>> pairs;
        for (const auto & g : oracle::all_labelled_graphs(n)) {
            auto b = oracle::brute_canonical(g);
            auto c = canonical_form(g);
            brute.insert(b);
            ours.insert(c);
            pairs.emplace(b, c);
        }
        CHECK(brute.size() == ours.size());
        CHECK(pairs.size() == brute.size());
    }
}

TEST_CASE("connected graph enumeration")
{
    const std::vector<std::size_t> expected{1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n)
        CHECK(enumerate_connected_graphs(n).size() == expected[static_cast<std::size_t>(n - 1)]);

    auto k1 = enumerate_connected_graphs(1);
    CHECK(k1.front() == complete_graph(1));

    // brute-force route: every labelled graph, filtered and deduplicated
    for (int n = 1; n <= 5; ++n) {
        std::set<std::string> classes;
        for (const auto & g : oracle::all_labelled_graphs(n))
            if (oracle::connected(oracle::Adjacency(g)))
                classes.insert(oracle::brute_canonical(g));
        CHECK(classes.size() == enumerate_connected_graphs(n).size());
    }

    for (const auto & g : enumerate_connected_graphs(5)) {
        CHECK(is_connected(g));
        CHECK(g == canonicalised(g));
    }

    CHECK_THROWS_AS(enumerate_connected_graphs(0), GraphError);
    CHECK_THROWS_AS(enumerate_connected_graphs(8), GraphError);
}

TEST_CASE("tree enumeration")
{
    const std::vector<std::size_t> expected{1, 1, 2, 3, 6, 11, 23, 47};
    for (int n = 2; n <= 9; ++n) {
        auto trees = enumerate_trees(n);
        CHECK(trees.size() == expected[static_cast<std::size_t>(n - 2)]);
        for (const auto & t : trees) {
            CHECK(t.edge_count() == n - 1);
            CHECK(is_connected(t));
        }
    }

    auto four = enumerate_trees(4);
    std::set<std::string> keys;
    for (const auto & t : four)
        keys.insert(canonical_form(t));
    CHECK(keys == std::set<std::string>{canonical_form(path_graph(4)), canonical_form(star_graph(4))});
    CHECK(enumerate_trees(2).front() == path_graph(2));

    // canonical-form deduplication over all Pruefer sequences gives the same classes
    for (int n = 3; n <= 7; ++n) {
        std::set<std::string> classes;
        std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
        while (true) {
            classes.insert(canonical_form(tree_from_pruefer(seq)));
            std::size_t i = 0;
            while (i < seq.size() && ++seq[i] == n)
                seq[i++] = 0;
            if (i == seq.size())
                break;
        }
        CHECK(classes.size() == expected[static_cast<std::size_t>(n - 2)]);
    }

    CHECK_THROWS_AS(enumerate_trees(1), GraphError);
    CHECK_THROWS_AS(enumerate_trees(10), GraphError);
}

TEST_CASE("Pruefer decoding")
{
    CHECK(tree_from_pruefer({}) == path_graph(2));
    CHECK(tree_from_pruefer({0, 0, 0}) == star_graph(5));
    CHECK(tree_from_pruefer({1, 2}) == path_graph(4));
    CHECK_THROWS_AS(tree_from_pruefer({5}), GraphError);
}

}
