#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cylrep {

using Index = std::size_t;
using Atom = std::uint32_t;
using NodeId = std::uint32_t;

enum class ErrorKind {
  arity_mismatch,
  index_out_of_range,
  not_omega,
  invalid_argument,
  axiom_violation,  // the structure contradicts the axioms of its declared class
  merge_conflict,
  mosaic_failure,
  network_failure,
  closure_violation,
  bound_exceeded,
  format,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Algebra classes. The *_minus variants drop the (Ax7) schema and are built
// with modified networks.
enum class Klass { rc, dc, sc, dc_minus, sc_minus };

std::string_view to_string(Klass k);
std::optional<Klass> parse_klass(std::string_view s);

constexpr bool diagonal_closed(Klass k) { return k != Klass::rc; }
constexpr bool permutation_closed(Klass k) {
  return k == Klass::sc || k == Klass::sc_minus;
}
constexpr bool modified(Klass k) {
  return k == Klass::dc_minus || k == Klass::sc_minus;
}
constexpr bool has_ax7(Klass k) { return !modified(k); }

}  // namespace cylrep
