#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cylrep/common.hpp"

namespace cylrep {

// A total map on the index set {0, ..., n-1}; images()[x] is the image of x.
class Transformation {
 public:
  explicit Transformation(std::vector<Index> images);

  static Transformation identity(Index n);
  // [i/j]: sends i to j, fixes everything else.
  static Transformation replacement(Index n, Index i, Index j);
  // [i,j]: swaps i and j.
  static Transformation transposition(Index n, Index i, Index j);

  Index arity() const noexcept { return images_.size(); }
  Index operator()(Index x) const { return images_.at(x); }
  std::span<const Index> images() const noexcept { return images_; }

  std::string to_string() const;

  friend bool operator==(const Transformation&, const Transformation&) = default;
  friend auto operator<=>(const Transformation&, const Transformation&) = default;

 private:
  std::vector<Index> images_;
};

// (sigma o tau)(x) = sigma(tau(x)).
Transformation compose(const Transformation& sigma, const Transformation& tau);

// The sequence f o tau, i.e. result[i] = f[tau(i)].
template <typename T>
std::vector<T> apply_to_sequence(std::span<const T> f, const Transformation& tau) {
  if (f.size() != tau.arity()) {
    throw Error(ErrorKind::arity_mismatch,
                "sequence of length " + std::to_string(f.size()) +
                    " composed with a transformation of arity " + std::to_string(tau.arity()));
  }
  std::vector<T> out(f.size());
  for (Index i = 0; i < f.size(); ++i) out[i] = f[tau(i)];
  return out;
}

template <typename T>
std::vector<T> apply_to_sequence(const std::vector<T>& f, const Transformation& tau) {
  return apply_to_sequence(std::span<const T>(f), tau);
}

bool is_permutation(const Transformation& tau);

// One factor [target/source] of a replacement word.
struct Replacement {
  Index target;
  Index source;

  friend bool operator==(const Replacement&, const Replacement&) = default;
};

// Writes a non-surjective tau as [i_1/j_1] o ... o [i_m/j_m] (m <= 2n).
// Read as register copies on a sequence f, step t performs f[i_t] := f[j_t];
// the least index outside Rng(tau) serves as the scratch register for
// breaking cycles.
std::vector<Replacement> decompose_replacements(const Transformation& tau);

// [i_1/j_1] o ... o [i_m/j_m]; the identity for an empty word.
Transformation recompose(Index n, std::span<const Replacement> word);

enum class TransformFamily { all, omega, permutations };

// Members of the family in lexicographic order of their image sequences.
std::vector<Transformation> enumerate(Index n, TransformFamily family);

struct ChainEntry {
  Transformation permutation;
  std::optional<std::size_t> parent;
  std::optional<std::pair<Index, Index>> transposition;
};

// All n! permutations; entry i > 0 equals entries[parent] o [k,l].
struct PermutationChain {
  Index arity = 0;
  std::vector<ChainEntry> entries;
};

// Breadth-first over the transposition Cayley graph, generators (k,l) with
// k < l in lexicographic order.
PermutationChain permutation_chain(Index n);

}  // namespace cylrep
