#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>

#include "cylrep/algebra.hpp"

namespace cylrep {

using Env = std::map<std::string, Element>;

// Terms over the signature 0, 1, d_ij, -, +, ., c_i, s^i_j, t^i_j.
class Term {
 public:
  enum class Op { var, zero, one, diag, complement, cyl, subst, t_op, join, meet };

  static Term var(std::string name);
  static Term zero();
  static Term one();
  static Term d(Index i, Index j);
  static Term c(Index i, Term x);
  static Term s(Index i, Index j, Term x);
  static Term t(Index i, Index j, Term x);

  friend Term operator+(Term a, Term b);
  friend Term operator*(Term a, Term b);
  friend Term operator-(Term a);

  Op op() const;
  std::string to_string() const;
  std::set<std::string> variables() const;

  // Throws Error(invalid_argument) on an unbound variable and
  // Error(index_out_of_range) on an index outside the dimension.
  Element eval(const AtomStructure& A, const Env& env) const;

  struct Node;

 private:
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

}  // namespace cylrep
