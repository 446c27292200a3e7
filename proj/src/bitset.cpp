#include "cylrep/bitset.hpp"

#include <string>

namespace cylrep {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::arity_mismatch: return "arity_mismatch";
    case ErrorKind::index_out_of_range: return "index_out_of_range";
    case ErrorKind::not_omega: return "not_omega";
    case ErrorKind::invalid_argument: return "invalid_argument";
    case ErrorKind::axiom_violation: return "axiom_violation";
    case ErrorKind::merge_conflict: return "merge_conflict";
    case ErrorKind::mosaic_failure: return "mosaic_failure";
    case ErrorKind::network_failure: return "network_failure";
    case ErrorKind::closure_violation: return "closure_violation";
    case ErrorKind::bound_exceeded: return "bound_exceeded";
    case ErrorKind::format: return "format";
  }
  return "unknown";
}

std::string_view to_string(Klass k) {
  switch (k) {
    case Klass::rc: return "rc";
    case Klass::dc: return "dc";
    case Klass::sc: return "sc";
    case Klass::dc_minus: return "dc-minus";
    case Klass::sc_minus: return "sc-minus";
  }
  return "?";
}

std::optional<Klass> parse_klass(std::string_view s) {
  for (Klass k : {Klass::rc, Klass::dc, Klass::sc, Klass::dc_minus, Klass::sc_minus}) {
    if (s == to_string(k)) return k;
  }
  return std::nullopt;
}

BitSet BitSet::full(std::size_t universe) {
  BitSet s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (universe % 64 != 0 && !s.words_.empty()) {
    s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
  }
  return s;
}

BitSet BitSet::single(std::size_t universe, std::size_t bit) {
  BitSet s(universe);
  s.set(bit);
  return s;
}

bool BitSet::empty() const noexcept {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

std::size_t BitSet::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t BitSet::first() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  }
  return universe_;
}

bool BitSet::subset_of(const BitSet& other) const {
  check_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

bool BitSet::intersects(const BitSet& other) const {
  check_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & other.words_[w]) != 0) return true;
  }
  return false;
}

BitSet& BitSet::operator|=(const BitSet& other) {
  check_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

BitSet& BitSet::operator&=(const BitSet& other) {
  check_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

BitSet& BitSet::operator-=(const BitSet& other) {
  check_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

BitSet BitSet::operator~() const { return full(universe_) - *this; }

std::vector<std::size_t> BitSet::members() const {
  std::vector<std::size_t> out;
  for_each([&](std::size_t b) { out.push_back(b); });
  return out;
}

void BitSet::check_universe(const BitSet& other) const {
  if (universe_ != other.universe_) {
    throw Error(ErrorKind::arity_mismatch,
                "bit sets over different universes (" + std::to_string(universe_) +
                    " vs " + std::to_string(other.universe_) + ")");
  }
}

}  // namespace cylrep
