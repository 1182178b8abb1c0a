#pragma once

#include "trc/vertex_set.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace trc::detail {

/// Backtracking over partitions of {0..n-1} into exactly k blocks, visited in
/// lexicographic restricted-growth-string order. Vertex v joins an existing
/// block or opens the next one; a branch dies once the vertices left cannot
/// open the blocks still missing. `accept(blocks)` is called on each complete
/// partition and ends the search by returning true.
template <typename Accept>
class KBlockSearch {
public:
    KBlockSearch(int n, int k, Accept accept) :
        n_(n), k_(k), accept_(std::move(accept)), blocks_(static_cast<std::size_t>(k), VertexSet(n))
    {
    }

    /// True when accept() stopped the search.
    auto run() -> bool { return k_ >= 1 && k_ <= n_ && descend(0, 0); }

    [[nodiscard]] auto nodes() const -> std::uint64_t { return nodes_; }

private:
    auto descend(int v, int used) -> bool
    {
        ++nodes_;
        if (v == n_)
            return used == k_ && accept_(std::span<const VertexSet>(blocks_));
        if (k_ - used > n_ - v)
            return false;

        int limit = used < k_ ? used : k_ - 1;
        for (int b = 0; b <= limit; ++b) {
            auto & block = blocks_[static_cast<std::size_t>(b)];
            block.insert(v);
            bool stop = descend(v + 1, b == used ? used + 1 : used);
            block.erase(v);
            if (stop)
                return true;
        }
        return false;
    }

    int n_;
    int k_;
    Accept accept_;
    std::vector<VertexSet> blocks_;
    std::uint64_t nodes_ = 0;
};

} // namespace trc::detail
