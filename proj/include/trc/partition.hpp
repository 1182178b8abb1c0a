#pragma once

#include "trc/vertex_set.hpp"

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace trc {

class PartitionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Nonempty, pairwise disjoint blocks covering {0..n-1}, ordered by smallest
/// member.
class Partition {
public:
    /// Validates and sorts the blocks; throws PartitionError when they are
    /// not a partition of {0..order-1}.
    Partition(int order, std::vector<VertexSet> blocks);

    /// Block i holds the vertices v with labels[v] == i. Labels need not be
    /// a restricted growth string; empty label values are rejected.
    static auto from_labels(std::span<const int> labels) -> Partition;

    [[nodiscard]] auto order() const -> int { return order_; }
    [[nodiscard]] auto size() const -> int { return static_cast<int>(blocks_.size()); }
    [[nodiscard]] auto blocks() const -> const std::vector<VertexSet> & { return blocks_; }
    [[nodiscard]] auto block(int i) const -> const VertexSet & { return blocks_.at(static_cast<std::size_t>(i)); }
    [[nodiscard]] auto block_of(int v) const -> int;

    /// Restricted growth string: entry v is the index of v's block.
    [[nodiscard]] auto labels() const -> std::vector<int>;

    /// "{{0,1},{2,3}}"
    [[nodiscard]] auto to_string() const -> std::string;

    friend auto operator==(const Partition &, const Partition &) -> bool = default;

private:
    int order_;
    std::vector<VertexSet> blocks_;
};

/// Advances a restricted growth string to its lexicographic successor.
/// Returns false (leaving rgs untouched) when it is already the last one.
auto next_restricted_growth(std::vector<int> & rgs) -> bool;

} // namespace trc
