#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace locdom {

using Vertex = int;

/// Width of a VertexSet; the hard ceiling on graph order.
inline constexpr int kMaxVertices = 64;

/// A set of vertices of one graph, stored as a single 64-bit word.
class VertexSet {
public:
    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const Vertex*;
        using reference = Vertex;

        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

        constexpr Vertex operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr iterator operator++(int) {
            iterator old = *this;
            ++*this;
            return old;
        }
        constexpr bool operator==(const iterator&) const = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    constexpr VertexSet(std::initializer_list<Vertex> vs) {
        for (Vertex v : vs) bits_ |= bit(v);
    }

    /// {0, 1, ..., n-1}
    static constexpr VertexSet prefix(int n) {
        return VertexSet(n >= kMaxVertices ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static constexpr VertexSet singleton(Vertex v) { return VertexSet(bit(v)); }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
    constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

    /// Smallest member; undefined on the empty set.
    constexpr Vertex front() const { return std::countr_zero(bits_); }
    /// Largest member; undefined on the empty set.
    constexpr Vertex back() const { return kMaxVertices - 1 - std::countl_zero(bits_); }

    constexpr VertexSet with(Vertex v) const { return VertexSet(bits_ | bit(v)); }
    constexpr VertexSet without(Vertex v) const { return VertexSet(bits_ & ~bit(v)); }

    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator^(VertexSet o) const { return VertexSet(bits_ ^ o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

    constexpr bool operator==(const VertexSet&) const = default;

    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

    std::vector<Vertex> to_vector() const { return {begin(), end()}; }

    /// "{0,2,5}"
    std::string to_string() const;

private:
    static constexpr std::uint64_t bit(Vertex v) { return std::uint64_t{1} << v; }

    std::uint64_t bits_ = 0;
};

/// Lexicographic order on the sorted member sequences, so {0,1,5} < {0,2} < {1}.
/// This is the tie-breaking order used by every search in the library.
constexpr bool lex_less(VertexSet a, VertexSet b) {
    const std::uint64_t diff = a.bits() ^ b.bits();
    if (diff == 0) return false;
    const int d = std::countr_zero(diff);
    const auto above = [d](VertexSet s) {
        return d + 1 < kMaxVertices && (s.bits() >> (d + 1)) != 0;
    };
    return a.contains(d) ? above(b) : !above(a);
}

struct LexLess {
    constexpr bool operator()(VertexSet a, VertexSet b) const { return lex_less(a, b); }
};

}  // namespace locdom
