#pragma once

#include "trc/graph.hpp"

#include <span>
#include <string_view>

namespace trc {

enum class FamilyKind {
    path,
    cycle,
    complete,
    complete_bipartite,
    star,
    double_star,
    friendship,
    c5_chord,
    figure1
};

// Canonical labelled members of the graph families. All throw GraphError when
// a parameter is below the family minimum.

/// P_n with edges i~i+1 (n >= 1).
auto path_graph(int n) -> Graph;
/// C_n with edges i~i+1 mod n (n >= 3).
auto cycle_graph(int n) -> Graph;
/// K_n (n >= 1).
auto complete_graph(int n) -> Graph;
/// K_{p,q}: sides {0..p-1} and {p..p+q-1}.
auto complete_bipartite_graph(int p, int q) -> Graph;
/// K_{1,n-1} of order n >= 2, centre 0.
auto star_graph(int n) -> Graph;
/// Supports 0 and 1 are adjacent; 0 carries leaves 2..a+1, 1 carries the next b.
auto double_star_graph(int a, int b) -> Graph;
/// k >= 2 triangles sharing hub 0; triangle i is {0, 2i+1, 2i+2}.
auto friendship_graph(int k) -> Graph;
/// C_5 on 0..4 plus the chord 1~4.
auto c5_chord_graph() -> Graph;
/// The 8-vertex graph attaining the leaf upper bound; v_i is vertex i-1.
auto figure1_graph() -> Graph;

/// Dispatches to the builders above; params are taken in the order listed there.
auto family(FamilyKind kind, std::span<const int> params) -> Graph;

/// Parses "path:8", "cycle:12", "complete:5", "kbip:3,4", "star:7",
/// "dstar:5,1", "friendship:3", "c5chord", "figure1".
auto family_from_dsl(std::string_view dsl) -> Graph;

} // namespace trc
