#pragma once

#include "trc/families.hpp"
#include "trc/graph.hpp"
#include "trc/partition.hpp"

#include <span>
#include <stdexcept>

namespace trc {

enum class DominationKind { dominating, total, total_restrained };

auto to_string(DominationKind kind) -> const char *;

/// The requested parameter does not exist for this graph, e.g. a total
/// dominating set in a graph with an isolated vertex.
class NoSolutionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Every vertex outside s has a neighbour in s.
auto is_dominating(const Graph & g, const VertexSet & s) -> bool;

/// Every vertex of g has a neighbour in s.
auto is_total_dominating(const Graph & g, const VertexSet & s) -> bool;

/// Total restrained dominating set: every vertex outside s has a neighbour
/// in s and a neighbour outside s, and every vertex of s has a neighbour in s.
/// Quantifiers over an empty side hold vacuously, so V is a TRD-set of any
/// isolate-free graph.
auto is_trd_set(const Graph & g, const VertexSet & s) -> bool;

auto satisfies(const Graph & g, const VertexSet & s, DominationKind kind) -> bool;

struct GammaResult {
    int value;
    VertexSet witness;
};

/// Minimum-cardinality set of the given kind. Subsets are tried by increasing
/// size, lexicographically within a size, so the witness is the first
/// minimum in that order. Throws NoSolutionError for the total kinds when g
/// has an isolated vertex.
auto gamma(const Graph & g, DominationKind kind) -> GammaResult;

/// Known closed forms for the total restrained domination number:
///   path n >= 4:        n - 2 floor((n-2)/4)
///   cycle n >= 4:       n - 2 floor(n/4)
///   complete n >= 4:    2
///   complete_bipartite with min(p, q) >= 2: 2
///   star n >= 2:        n
/// Throws std::domain_error outside these hypotheses.
auto gamma_tr_closed_form(FamilyKind kind, std::span<const int> params) -> int;

struct DomaticResult {
    int value;
    Partition witness;
    bool exhaustive;
};

/// Maximum number of blocks in a partition of V whose blocks all satisfy the
/// kind (total or total_restrained). Throws NoSolutionError on isolated
/// vertices and std::invalid_argument for the plain dominating kind.
auto domatic(const Graph & g, DominationKind kind) -> DomaticResult;

/// True when s is a TRD-set and no proper subset of s is one.
auto is_minimal_trd(const Graph & g, const VertexSet & s) -> bool;

/// A minimal TRD-set contained in s. Vertices are removed greedily in
/// ascending order, restarting after each removal. TRD-sets are not closed
/// under supersets, so a set with no removable single vertex can still
/// contain a smaller TRD-set; the first such subset by size then
/// lexicographic order is taken, which is minimal by construction.
/// Throws std::invalid_argument when s is not a TRD-set.
auto shrink_to_minimal_trd(const Graph & g, const VertexSet & s) -> VertexSet;

} // namespace trc
