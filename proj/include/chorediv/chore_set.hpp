#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <iterator>

namespace chorediv {

// Chores are 0-indexed integers. Sets of chores are 64-bit masks, which caps
// instances at 64 chores.
inline constexpr int kMaxChores = 64;

// Value-type bitset over chore indices. Iteration visits members in
// ascending index order.
class ChoreSet {
 public:
  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::forward_iterator_tag;

    constexpr iterator() = default;
    explicit constexpr iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator copy = *this;
      ++*this;
      return copy;
    }
    friend constexpr bool operator==(iterator, iterator) = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr ChoreSet() = default;

  static constexpr ChoreSet from_bits(std::uint64_t bits) {
    return ChoreSet(bits);
  }

  // The set {0, 1, ..., m-1}.
  static constexpr ChoreSet full(int m) {
    assert(m >= 0 && m <= kMaxChores);
    if (m == 0) return ChoreSet();
    return ChoreSet(~std::uint64_t{0} >> (kMaxChores - m));
  }

  static constexpr ChoreSet singleton(int chore) {
    assert(chore >= 0 && chore < kMaxChores);
    return ChoreSet(std::uint64_t{1} << chore);
  }

  static constexpr ChoreSet of(std::initializer_list<int> chores) {
    ChoreSet s;
    for (int c : chores) s = s.with(c);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }

  constexpr bool contains(int chore) const {
    assert(chore >= 0 && chore < kMaxChores);
    return (bits_ >> chore) & 1u;
  }

  constexpr ChoreSet with(int chore) const {
    assert(chore >= 0 && chore < kMaxChores);
    return ChoreSet(bits_ | (std::uint64_t{1} << chore));
  }

  constexpr ChoreSet without(int chore) const {
    assert(chore >= 0 && chore < kMaxChores);
    return ChoreSet(bits_ & ~(std::uint64_t{1} << chore));
  }

  constexpr bool subset_of(ChoreSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  constexpr bool intersects(ChoreSet other) const {
    return (bits_ & other.bits_) != 0;
  }

  // Lowest chore index in the set; the set must be nonempty.
  constexpr int lowest() const {
    assert(!empty());
    return std::countr_zero(bits_);
  }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  friend constexpr ChoreSet operator|(ChoreSet a, ChoreSet b) {
    return ChoreSet(a.bits_ | b.bits_);
  }
  friend constexpr ChoreSet operator&(ChoreSet a, ChoreSet b) {
    return ChoreSet(a.bits_ & b.bits_);
  }
  // Set difference.
  friend constexpr ChoreSet operator-(ChoreSet a, ChoreSet b) {
    return ChoreSet(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(ChoreSet, ChoreSet) = default;

 private:
  explicit constexpr ChoreSet(std::uint64_t bits) : bits_(bits) {}

  std::uint64_t bits_ = 0;
};

}  // namespace chorediv
