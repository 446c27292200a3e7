#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cylrep/bitset.hpp"
#include "cylrep/common.hpp"
#include "cylrep/transform.hpp"

namespace cylrep {

// Elements of a finite complete atomic algebra are sets of atoms.
using Element = BitSet;

// A finite atomic cylindric-type algebra given by its atoms, the atoms below
// c_i a for each atom a, and the atoms below each diagonal d_ij.
//
// Storage is per atom rather than per partition so that malformed inputs can
// be represented; wellformed() reports what is wrong with them.
class AtomStructure {
 public:
  AtomStructure() = default;
  // Every image and diagonal starts empty; fill them with set_cyl_image and
  // set_diagonal.
  AtomStructure(Index dimension, std::size_t atom_count);

  // Throws Error(format) when a list is not total or mentions an atom
  // outside the atom range.
  static AtomStructure from_lists(Index dimension, std::size_t atom_count,
                                  const std::vector<std::vector<std::vector<Atom>>>& cyl,
                                  const std::vector<std::vector<std::vector<Atom>>>& diag);

  Index dimension() const noexcept { return dimension_; }
  std::size_t atom_count() const noexcept { return atom_count_; }

  const Element& cyl_image(Index i, Atom a) const;
  const Element& diagonal(Index i, Index j) const;

  void set_cyl_image(Index i, Atom a, Element image);
  void set_diagonal(Index i, Index j, Element atoms);

  // Presentation names; defaults to the atom index.
  const std::string& name(Atom a) const;
  const std::vector<std::string>& names() const noexcept { return names_; }
  void set_names(std::vector<std::string> names);

  Element empty() const { return Element(atom_count_); }
  Element full() const { return Element::full(atom_count_); }
  Element single(Atom a) const;

  void check_index(Index i) const;
  void check_atom(Atom a) const;

  friend bool operator==(const AtomStructure&, const AtomStructure&) = default;

 private:
  Index dimension_ = 0;
  std::size_t atom_count_ = 0;
  std::vector<std::vector<Element>> cyl_;   // [i][a]
  std::vector<std::vector<Element>> diag_;  // [i][j]
  std::vector<std::string> names_;
};

struct Violation {
  std::string invariant;
  std::string detail;
};

// Empty when every structural invariant holds: atom_count > 0, d_ii = 1,
// a <= c_i a, and b <= c_i a iff c_i a = c_i b.
std::vector<Violation> wellformed(const AtomStructure& A);

Element cyl(const AtomStructure& A, Index i, const Element& x);
// s^i_j x: x when i = j, otherwise c_i(x . d_ij).
Element s_subst(const AtomStructure& A, Index i, Index j, const Element& x);
Element diag_element(const AtomStructure& A, Index i, Index j);

// t^i_j a = c_i a . d_ij as an atom, or nothing when it is 0. Throws
// Error(axiom_violation) when the meet holds two or more atoms.
std::optional<Atom> t_atom(const AtomStructure& A, Index i, Index j, Atom a);

// p_ij x; the product over k != i,j is 1 when empty.
Element p_elem(const AtomStructure& A, Index i, Index j, const Element& x);

// tau^A a for tau outside the permutations, folding t_atom over the
// replacement word (first factor applied first).
std::optional<Atom> tau_atom(const AtomStructure& A, const Transformation& tau, Atom a);
std::optional<Atom> tau_atom(const AtomStructure& A, std::span<const Replacement> word, Atom a);

}  // namespace cylrep
