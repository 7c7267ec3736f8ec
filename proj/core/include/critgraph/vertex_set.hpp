#ifndef CRITGRAPH_VERTEX_SET_HPP
#define CRITGRAPH_VERTEX_SET_HPP

#include <bit>
#include <cstdint>
#include <string>

namespace critgraph {

// Set of vertex indices 0..63 packed into one machine word.
// All operations are O(1); iteration visits members in increasing order.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    // {0, 1, ..., n-1}
    static constexpr VertexSet all(int n) {
        return VertexSet(n >= 64 ? ~0ULL : ((1ULL << n) - 1));
    }
    static constexpr VertexSet single(int v) { return VertexSet(1ULL << v); }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1ULL; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int count() const { return std::popcount(bits_); }

    constexpr VertexSet& add(int v) { bits_ |= 1ULL << v; return *this; }
    constexpr VertexSet& remove(int v) { bits_ &= ~(1ULL << v); return *this; }

    // lowest member; undefined on the empty set
    constexpr int first() const { return std::countr_zero(bits_); }

    constexpr bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    friend constexpr VertexSet operator^(VertexSet a, VertexSet b) { return VertexSet(a.bits_ ^ b.bits_); }
    constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
    friend constexpr bool operator==(VertexSet a, VertexSet b) { return a.bits_ == b.bits_; }
    friend constexpr bool operator!=(VertexSet a, VertexSet b) { return a.bits_ != b.bits_; }
    // lexicographic on the word; used only for deterministic ordering
    friend constexpr bool operator<(VertexSet a, VertexSet b) { return a.bits_ < b.bits_; }

    class iterator {
    public:
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr int operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
        constexpr bool operator!=(const iterator& o) const { return rest_ != o.rest_; }
    private:
        std::uint64_t rest_;
    };
    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

    // "{0,2,5}" — diagnostics and witness printing
    std::string to_string() const;

private:
    std::uint64_t bits_ = 0;
};

} // namespace critgraph

#endif
