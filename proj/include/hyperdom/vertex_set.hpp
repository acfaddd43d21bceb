#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace hyperdom {

/// 1-based vertex identifier.
using VertexId = int;

/// Hard limit on vertices per hypergraph; one bit per vertex in a 64-bit word.
inline constexpr int kMaxVertices = 64;

/// A set of vertex ids packed into a bit word (bit v-1 stands for vertex v).
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    VertexSet(std::initializer_list<VertexId> ids) {
        for (VertexId v : ids) insert(v);
    }

    static VertexSet from_ids(const std::vector<VertexId>& ids) {
        VertexSet s;
        for (VertexId v : ids) s.insert(v);
        return s;
    }

    /// {1, ..., n}
    static constexpr VertexSet range(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool contains(VertexId v) const { return (bits_ >> (v - 1)) & 1U; }

    constexpr void insert(VertexId v) { bits_ |= std::uint64_t{1} << (v - 1); }
    constexpr void erase(VertexId v) { bits_ &= ~(std::uint64_t{1} << (v - 1)); }

    /// Smallest member; undefined on the empty set.
    constexpr VertexId front() const { return std::countr_zero(bits_) + 1; }
    /// Largest member; undefined on the empty set.
    constexpr VertexId back() const { return 64 - std::countl_zero(bits_); }

    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }
    constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }

    constexpr bool operator==(const VertexSet&) const = default;

    std::vector<VertexId> members() const {
        std::vector<VertexId> out;
        out.reserve(size());
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
        return out;
    }

    template <typename F>
    constexpr void for_each(F&& f) const {
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(std::countr_zero(b) + 1);
    }

    /// "{1,2,3}"
    std::string to_string() const;

private:
    std::uint64_t bits_ = 0;
};

/// Shortlex on sorted member sequences: smaller sets first, then lexicographic.
/// This is the canonical edge order.
bool shortlex_less(VertexSet a, VertexSet b);

}  // namespace hyperdom
