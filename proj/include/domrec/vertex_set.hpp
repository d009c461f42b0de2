#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace domrec {

/// Largest graph order the bit-vector kernel supports.
inline constexpr int kMaxVertices = 64;

/// A subset of {0, ..., n-1} stored as a single 64-bit word.
///
/// Only bits below the owning graph's order are ever set; every constructor
/// that takes an order (full(), from_ids() via Graph) enforces that.
class VertexSet {
public:
  using Word = std::uint64_t;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(Word bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> ids);

  static constexpr VertexSet full(int n) {
    return VertexSet(n >= 64 ? ~Word{0} : ((Word{1} << n) - 1));
  }
  static constexpr VertexSet singleton(int v) { return VertexSet(Word{1} << v); }
  static VertexSet from_ids(const std::vector<int>& ids);

  constexpr Word bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int cardinality() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr int lowest() const { return std::countr_zero(bits_); }

  constexpr VertexSet with(int v) const { return VertexSet(bits_ | (Word{1} << v)); }
  constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~(Word{1} << v)); }

  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator^(VertexSet o) const { return VertexSet(bits_ ^ o.bits_); }
  constexpr VertexSet minus(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }

  constexpr bool operator==(const VertexSet&) const = default;

  std::vector<int> ids() const;

  /// "{0,3,5}"
  std::string to_string() const;

  /// Iterates members in increasing order.
  class Iterator {
  public:
    constexpr explicit Iterator(Word rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr Iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr bool operator!=(const Iterator& o) const { return rest_ != o.rest_; }

  private:
    Word rest_;
  };
  constexpr Iterator begin() const { return Iterator(bits_); }
  constexpr Iterator end() const { return Iterator(0); }

private:
  Word bits_ = 0;
};

/// Canonical order: by cardinality, then lexicographically on the sorted
/// member lists ({0,1} < {0,2} < {1,2}).
constexpr bool canonical_less(VertexSet a, VertexSet b) {
  const int ca = a.cardinality();
  const int cb = b.cardinality();
  if (ca != cb) return ca < cb;
  const VertexSet::Word diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  // Equal cardinality: whichever holds the smallest differing element sorts first.
  return (a.bits() & (diff & (~diff + 1))) != 0;
}

struct CanonicalLess {
  constexpr bool operator()(VertexSet a, VertexSet b) const { return canonical_less(a, b); }
};

void sort_canonical(std::vector<VertexSet>& sets);

struct VertexSetHash {
  std::size_t operator()(VertexSet s) const noexcept {
    // splitmix64 finalizer
    std::uint64_t z = s.bits() + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return static_cast<std::size_t>(z ^ (z >> 31));
  }
};

}  // namespace domrec
