#pragma once

#include "trc/graph.hpp"
#include "trc/partition.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace trc {

/// Two disjoint nonempty sets form a coalition when neither is a TRD-set but
/// their union is. Throws std::invalid_argument on empty or overlapping input.
auto forms_coalition(const Graph & g, const VertexSet & x, const VertexSet & y) -> bool;

struct BlockDiagnostic {
    bool is_trd = false;
    /// Indices of the other blocks this block forms a coalition with.
    std::vector<int> partners;
};

struct TrcValidation {
    bool valid = false;
    std::vector<BlockDiagnostic> blocks;
};

/// Full per-block report; p must partition g's vertex set.
auto check_trc_partition(const Graph & g, const Partition & p) -> TrcValidation;

/// No block is a TRD-set and every block has a coalition partner.
auto is_trc_partition(const Graph & g, const Partition & p) -> bool;

/// Blocks j != i that form a coalition with block i.
auto coalition_partners(const Graph & g, const Partition & p, int i) -> std::vector<int>;

/// Graph on the blocks of a trc-partition, with an edge between every
/// coalition pair. Throws std::invalid_argument when p is not a trc-partition.
auto build_trcg(const Graph & g, const Partition & p) -> Graph;

enum class SolveMode { search, oracle };

struct TrcSolveResult {
    /// Maximum trc-partition size; 0 when g has an isolated vertex.
    int value = 0;
    /// First maximum partition in restricted-growth-string order.
    std::optional<Partition> witness;
    /// Optimality is certified by a completed search.
    bool exhaustive = false;
    std::uint64_t nodes = 0;
};

/// Largest k the search needs to try: Delta+1 when delta = 1, 2*Delta when
/// delta = 2, otherwise n (always capped at n).
auto search_upper_bound(const Graph & g) -> int;

/// Exact total restrained coalition number.
///
/// `oracle` walks every restricted growth string of length n and keeps the
/// largest valid partition. `search` tries k = search_upper_bound(g) down to
/// 2 with a backtracking assignment of vertices to exactly k blocks (vertex 0
/// in block 0, new blocks opened in order) and returns the first feasible k.
/// Branches are cut only when too few vertices remain to open the missing
/// blocks: TRD-sets are not closed under supersets, so partial blocks carry
/// no usable domination information.
///
/// Both modes return the same value and witness.
auto c_tr_exact(const Graph & g, SolveMode mode = SolveMode::search) -> TrcSolveResult;

/// trc-partition built from a maximum total restrained domatic partition
/// S_1..S_k: each S_i (i < k) is shrunk to a minimal TRD-set with the
/// leftovers moved into S_k, and split into {lowest vertex} and the rest.
/// S_k is split the same way when minimal; otherwise its minimal core is
/// split and the residue is either kept as its own block (when it forms a
/// coalition with a block already built) or merged into the core's second
/// half. The result has at least 2 * d_t^r(g) blocks.
/// Throws NoSolutionError when g has an isolated vertex.
auto constructive_lower_bound(const Graph & g) -> Partition;

} // namespace trc
