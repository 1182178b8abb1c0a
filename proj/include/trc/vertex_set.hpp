#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace trc {

/// Largest graph order a VertexSet can represent.
inline constexpr int max_order = 64;

/// A subset of the vertices {0, ..., n-1} of a fixed-order graph, stored as a
/// single machine word. All binary operations require both operands to share
/// the same order.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int order) : order_(order)
    {
        if (order < 0 || order > max_order)
            throw std::invalid_argument("VertexSet order out of range: " + std::to_string(order));
    }

    VertexSet(int order, std::initializer_list<int> members) : VertexSet(order)
    {
        for (int v : members)
            insert(v);
    }

    static auto from_bits(int order, std::uint64_t bits) -> VertexSet
    {
        VertexSet s(order);
        s.bits_ = bits & s.universe_mask();
        return s;
    }

    static auto full(int order) -> VertexSet
    {
        VertexSet s(order);
        s.bits_ = s.universe_mask();
        return s;
    }

    template <typename Range>
    static auto of(int order, const Range & members) -> VertexSet
    {
        VertexSet s(order);
        for (int v : members)
            s.insert(v);
        return s;
    }

    [[nodiscard]] auto order() const -> int { return order_; }
    [[nodiscard]] auto bits() const -> std::uint64_t { return bits_; }
    [[nodiscard]] auto size() const -> int { return std::popcount(bits_); }
    [[nodiscard]] auto empty() const -> bool { return bits_ == 0; }

    [[nodiscard]] auto contains(int v) const -> bool
    {
        return v >= 0 && v < order_ && ((bits_ >> v) & 1U) != 0;
    }

    void insert(int v)
    {
        check_vertex(v);
        bits_ |= std::uint64_t{1} << v;
    }

    void erase(int v)
    {
        check_vertex(v);
        bits_ &= ~(std::uint64_t{1} << v);
    }

    /// Smallest member, or -1 when empty.
    [[nodiscard]] auto first() const -> int { return bits_ == 0 ? -1 : std::countr_zero(bits_); }

    [[nodiscard]] auto complement() const -> VertexSet { return from_bits(order_, ~bits_); }

    [[nodiscard]] auto intersects(const VertexSet & other) const -> bool
    {
        check_same_order(other);
        return (bits_ & other.bits_) != 0;
    }

    [[nodiscard]] auto is_subset_of(const VertexSet & other) const -> bool
    {
        check_same_order(other);
        return (bits_ & ~other.bits_) == 0;
    }

    auto operator|=(const VertexSet & other) -> VertexSet &
    {
        check_same_order(other);
        bits_ |= other.bits_;
        return *this;
    }

    auto operator&=(const VertexSet & other) -> VertexSet &
    {
        check_same_order(other);
        bits_ &= other.bits_;
        return *this;
    }

    auto operator-=(const VertexSet & other) -> VertexSet &
    {
        check_same_order(other);
        bits_ &= ~other.bits_;
        return *this;
    }

    friend auto operator|(VertexSet a, const VertexSet & b) -> VertexSet { return a |= b; }
    friend auto operator&(VertexSet a, const VertexSet & b) -> VertexSet { return a &= b; }
    friend auto operator-(VertexSet a, const VertexSet & b) -> VertexSet { return a -= b; }

    friend auto operator==(const VertexSet &, const VertexSet &) -> bool = default;

    /// Members in increasing order.
    [[nodiscard]] auto members() const -> std::vector<int>
    {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (auto b = bits_; b != 0; b &= b - 1)
            out.push_back(std::countr_zero(b));
        return out;
    }

    /// Calls f(v) for every member v in increasing order.
    template <typename F>
    void for_each(F && f) const
    {
        for (auto b = bits_; b != 0; b &= b - 1)
            f(std::countr_zero(b));
    }

    /// "{0,1,4}"
    [[nodiscard]] auto to_string() const -> std::string
    {
        std::string out = "{";
        bool first_member = true;
        for_each([&](int v) {
            if (! first_member)
                out += ',';
            out += std::to_string(v);
            first_member = false;
        });
        return out + "}";
    }

private:
    [[nodiscard]] auto universe_mask() const -> std::uint64_t
    {
        return order_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << order_) - 1;
    }

    void check_vertex(int v) const
    {
        if (v < 0 || v >= order_)
            throw std::out_of_range("vertex " + std::to_string(v) + " out of range for order " + std::to_string(order_));
    }

    void check_same_order(const VertexSet & other) const
    {
        if (order_ != other.order_)
            throw std::invalid_argument("VertexSet order mismatch");
    }

    int order_ = 0;
    std::uint64_t bits_ = 0;
};

} // namespace trc
