#include "trc/bounds.hpp"
#include "trc/catalog.hpp"
#include "trc/families.hpp"

#include <doctest.h>

using namespace trc;

namespace {
    auto report_for(const Graph & g) -> BoundsReport { return bounds_report(g, c_tr_exact(g)); }
}

TEST_SUITE("bounds") {

TEST_CASE("girth at least 7")
{
    auto r = report_for(cycle_graph(7));
    const auto * e = r.find(bound_girth7);
    REQUIRE(e);
    CHECK(e->applicable);
    CHECK(e->comparison == Comparison::at_least);
    CHECK(e->bound == 3);
    CHECK(e->observed == 3);
    CHECK(e->pass);
    CHECK(e->tight);
    CHECK(r.all_pass());

    const auto * c6 = report_for(cycle_graph(6)).find(bound_girth7);
    REQUIRE(c6);
    CHECK_FALSE(c6->applicable);
    CHECK(c6->pass);
}

TEST_CASE("minimum degree two")
{
    auto r = report_for(cycle_graph(8));
    const auto * e = r.find(bound_min_degree2);
    REQUIRE(e);
    CHECK(e->applicable);
    CHECK(e->comparison == Comparison::at_most);
    CHECK(e->bound == 4);
    CHECK(e->observed == 4);
    CHECK(e->tight);
}

TEST_CASE("leaves")
{
    auto r = report_for(star_graph(6));
    const auto * e = r.find(bound_leaf);
    REQUIRE(e);
    CHECK(e->applicable);
    CHECK(e->bound == 6);
    CHECK(e->observed == 2);
    CHECK(e->pass);
    CHECK_FALSE(e->tight);
    CHECK(r.all_pass());
}

TEST_CASE("isolated vertices")
{
    auto r = report_for(Graph::from_edge_list(4, {{0, 1}, {1, 2}}));
    const auto * zero = r.find(bound_isolated_zero);
    REQUIRE(zero);
    CHECK(zero->applicable);
    CHECK(zero->observed == 0);
    CHECK(zero->pass);
    const auto * range = r.find(bound_range);
    REQUIRE(range);
    CHECK_FALSE(range->applicable);
    CHECK(r.all_pass());
}

TEST_CASE("a wrong solved value is reported as a failure")
{
    auto g = cycle_graph(5);
    TrcSolveResult wrong;
    wrong.value = 1;
    auto r = bounds_report(g, wrong);
    CHECK_FALSE(r.all_pass());
    CHECK_FALSE(r.find(bound_range)->pass);
    CHECK(r.find("no-such-bound") == nullptr);
}

TEST_CASE("every entry passes on the small catalog")
{
    for (int n = 2; n <= 6; ++n)
        for (const auto & g : enumerate_connected_graphs(n))
            REQUIRE(report_for(g).all_pass());
    for (int n = 3; n <= 8; ++n)
        for (const auto & t : enumerate_trees(n))
            REQUIRE(report_for(t).all_pass());
}

TEST_CASE("comparison names")
{
    CHECK(std::string(to_string(Comparison::equal)) == "==");
    CHECK(std::string(to_string(Comparison::at_least)) == ">=");
    CHECK(std::string(to_string(Comparison::at_most)) == "<=");
    CHECK(std::string(to_string(Comparison::between)) == "in");
}

}
