#pragma once

#include "trc/graph.hpp"

#include <string>
#include <vector>

namespace trc {

inline constexpr int max_canonical_order = 10;
inline constexpr int max_connected_catalog_order = 7;
inline constexpr int max_tree_catalog_order = 9;

/// Vertex v of g goes to position result[v] in the canonical labelling.
/// Requires g.order() <= max_canonical_order.
auto canonical_labelling(const Graph & g) -> std::vector<int>;

/// Isomorphism-invariant key: the graph6 encoding of g under its canonical
/// labelling, i.e. the lexicographically smallest upper-triangle adjacency
/// bit string among labellings that order vertices by refined degree class.
auto canonical_form(const Graph & g) -> std::string;

/// g relabelled into canonical form.
auto canonicalised(const Graph & g) -> Graph;

/// One canonically labelled representative per isomorphism class of
/// connected graphs of order n (1 <= n <= 7), sorted by canonical key.
auto enumerate_connected_graphs(int n) -> std::vector<Graph>;

/// One canonically labelled representative per isomorphism class of trees of
/// order n (2 <= n <= 9), generated from all Pruefer sequences and sorted by
/// canonical key.
auto enumerate_trees(int n) -> std::vector<Graph>;

/// Labelled tree of order seq.size() + 2 encoded by a Pruefer sequence.
auto tree_from_pruefer(const std::vector<int> & seq) -> Graph;

} // namespace trc
