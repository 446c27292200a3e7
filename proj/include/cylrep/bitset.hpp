#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

#include "cylrep/common.hpp"

namespace cylrep {

// Fixed-universe bit set. Elements of a finite atomic algebra are sets of
// atoms; the same type also carries subsets of a representation's unit.
class BitSet {
 public:
  BitSet() = default;
  explicit BitSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static BitSet full(std::size_t universe);
  static BitSet single(std::size_t universe, std::size_t bit);

  std::size_t universe() const noexcept { return universe_; }

  bool test(std::size_t bit) const {
    return (words_[bit >> 6] >> (bit & 63)) & 1u;
  }
  void set(std::size_t bit) { words_[bit >> 6] |= std::uint64_t{1} << (bit & 63); }
  void reset(std::size_t bit) {
    words_[bit >> 6] &= ~(std::uint64_t{1} << (bit & 63));
  }
  void flip(std::size_t bit) { words_[bit >> 6] ^= std::uint64_t{1} << (bit & 63); }

  bool empty() const noexcept;
  std::size_t count() const noexcept;
  // Least member, or universe() when empty.
  std::size_t first() const noexcept;
  bool subset_of(const BitSet& other) const;
  bool intersects(const BitSet& other) const;

  BitSet& operator|=(const BitSet& other);
  BitSet& operator&=(const BitSet& other);
  BitSet& operator-=(const BitSet& other);

  friend BitSet operator|(BitSet a, const BitSet& b) { return a |= b; }
  friend BitSet operator&(BitSet a, const BitSet& b) { return a &= b; }
  friend BitSet operator-(BitSet a, const BitSet& b) { return a -= b; }
  // Complement relative to the universe.
  BitSet operator~() const;

  friend bool operator==(const BitSet&, const BitSet&) = default;
  friend std::strong_ordering operator<=>(const BitSet& a, const BitSet& b) {
    if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
    return a.words_ <=> b.words_;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        f(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<std::size_t> members() const;

 private:
  void check_universe(const BitSet& other) const;

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace cylrep
