#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace mpr {

inline constexpr int kMaxIndex = 64;

/// Set of small non-negative indices (< 64) backed by a single machine word.
/// The tag keeps node sets and edge sets from being mixed up.
template <typename Tag>
class IndexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = int;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr int operator*() const { return std::countr_zero(rest_); }
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

  constexpr IndexSet() = default;
  constexpr IndexSet(std::initializer_list<int> items) {
    for (int i : items) insert(i);
  }

  static constexpr IndexSet from_bits(std::uint64_t bits) {
    IndexSet s;
    s.bits_ = bits;
    return s;
  }
  /// {0, 1, ..., n-1}
  static constexpr IndexSet first_n(int n) {
    return from_bits(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  template <typename Range>
  static IndexSet from_range(const Range& r) {
    IndexSet s;
    for (int i : r) s.insert(i);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1u; }
  constexpr void insert(int i) { bits_ |= std::uint64_t{1} << i; }
  constexpr void erase(int i) { bits_ &= ~(std::uint64_t{1} << i); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  /// Smallest member; undefined on the empty set.
  constexpr int front() const { return std::countr_zero(bits_); }

  constexpr bool is_subset_of(IndexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(IndexSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr IndexSet with(int i) const {
    IndexSet s = *this;
    s.insert(i);
    return s;
  }
  constexpr IndexSet without(int i) const {
    IndexSet s = *this;
    s.erase(i);
    return s;
  }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const { return std::vector<int>(begin(), end()); }

  friend constexpr IndexSet operator|(IndexSet a, IndexSet b) { return from_bits(a.bits_ | b.bits_); }
  friend constexpr IndexSet operator&(IndexSet a, IndexSet b) { return from_bits(a.bits_ & b.bits_); }
  friend constexpr IndexSet operator-(IndexSet a, IndexSet b) { return from_bits(a.bits_ & ~b.bits_); }
  friend constexpr IndexSet operator^(IndexSet a, IndexSet b) { return from_bits(a.bits_ ^ b.bits_); }
  IndexSet& operator|=(IndexSet o) { bits_ |= o.bits_; return *this; }
  IndexSet& operator&=(IndexSet o) { bits_ &= o.bits_; return *this; }
  IndexSet& operator-=(IndexSet o) { bits_ &= ~o.bits_; return *this; }

  friend constexpr bool operator==(IndexSet, IndexSet) = default;

  /// Lexicographic order of the sorted member lists ({0,3} < {1} < {1,2}).
  friend bool lex_less(IndexSet a, IndexSet b) {
    const std::uint64_t diff = a.bits_ ^ b.bits_;
    if (diff == 0) return false;
    const int k = std::countr_zero(diff);
    const std::uint64_t above = k == 63 ? 0 : ~((std::uint64_t{2} << k) - 1);
    if ((a.bits_ >> k) & 1u) {
      // b lacks k: b is smaller only if it has already ended
      return (b.bits_ & above) != 0;
    }
    return (a.bits_ & above) == 0;
  }

 private:
  std::uint64_t bits_ = 0;
};

using NodeSet = IndexSet<struct NodeTag>;
using EdgeSet = IndexSet<struct EdgeTag>;

}  // namespace mpr
