#include "trc/partition.hpp"

#include <algorithm>

namespace trc {

Partition::Partition(int order, std::vector<VertexSet> blocks) :
    order_(order), blocks_(std::move(blocks))
{
    VertexSet covered(order);
    for (const auto & b : blocks_) {
        if (b.order() != order)
            throw PartitionError("block " + b.to_string() + " has the wrong vertex range");
        if (b.empty())
            throw PartitionError("partition contains an empty block");
        if (b.intersects(covered))
            throw PartitionError("block " + b.to_string() + " overlaps an earlier block");
        covered |= b;
    }
    if (covered != VertexSet::full(order))
        throw PartitionError("blocks do not cover every vertex");
    std::ranges::sort(blocks_, {}, &VertexSet::first);
}

auto Partition::from_labels(std::span<const int> labels) -> Partition
{
    const int n = static_cast<int>(labels.size());
    int count = 0;
    for (int l : labels) {
        if (l < 0)
            throw PartitionError("negative block label");
        count = std::max(count, l + 1);
    }
    std::vector<VertexSet> blocks(static_cast<std::size_t>(count), VertexSet(n));
    for (int v = 0; v < n; ++v)
        blocks[static_cast<std::size_t>(labels[static_cast<std::size_t>(v)])].insert(v);
    return Partition(n, std::move(blocks));
}

auto Partition::block_of(int v) const -> int
{
    for (int i = 0; i < size(); ++i)
        if (blocks_[static_cast<std::size_t>(i)].contains(v))
            return i;
    throw std::out_of_range("vertex " + std::to_string(v) + " not in partition");
}

auto Partition::labels() const -> std::vector<int>
{
    std::vector<int> out(static_cast<std::size_t>(order_));
    for (int i = 0; i < size(); ++i)
        blocks_[static_cast<std::size_t>(i)].for_each([&](int v) { out[static_cast<std::size_t>(v)] = i; });
    return out;
}

auto Partition::to_string() const -> std::string
{
    std::string out = "{";
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (i > 0)
            out += ',';
        out += blocks_[i].to_string();
    }
    return out + "}";
}

auto next_restricted_growth(std::vector<int> & rgs) -> bool
{
    // prefix_max[i] = max(rgs[0..i-1]); position i may grow to prefix_max[i] + 1.
    const auto n = rgs.size();
    std::vector<int> prefix_max(n, -1);
    for (std::size_t i = 1; i < n; ++i)
        prefix_max[i] = std::max(prefix_max[i - 1], rgs[i - 1]);

    for (std::size_t i = n; i-- > 1;) {
        if (rgs[i] <= prefix_max[i]) {
            ++rgs[i];
            std::fill(rgs.begin() + static_cast<std::ptrdiff_t>(i) + 1, rgs.end(), 0);
            return true;
        }
    }
    return false;
}

} // namespace trc
