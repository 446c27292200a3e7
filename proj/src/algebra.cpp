#include "cylrep/algebra.hpp"

namespace cylrep {

AtomStructure::AtomStructure(Index dimension, std::size_t atom_count)
    : dimension_(dimension),
      atom_count_(atom_count),
      cyl_(dimension, std::vector<Element>(atom_count, Element(atom_count))),
      diag_(dimension, std::vector<Element>(dimension, Element(atom_count))) {
  names_.reserve(atom_count);
  for (std::size_t a = 0; a < atom_count; ++a) names_.push_back(std::to_string(a));
}

AtomStructure AtomStructure::from_lists(Index dimension, std::size_t atom_count,
                                        const std::vector<std::vector<std::vector<Atom>>>& cyl,
                                        const std::vector<std::vector<std::vector<Atom>>>& diag) {
  if (dimension < 2) {
    throw Error(ErrorKind::format, "n: dimension must be at least 2, got " + std::to_string(dimension));
  }
  AtomStructure A(dimension, atom_count);
  auto to_element = [&](const std::vector<Atom>& list, const std::string& where) {
    Element e(atom_count);
    for (Atom b : list) {
      if (b >= atom_count) {
        throw Error(ErrorKind::format, where + ": atom index " + std::to_string(b) + " out of range");
      }
      e.set(b);
    }
    return e;
  };
  if (cyl.size() != dimension) {
    throw Error(ErrorKind::format, "cyl: expected " + std::to_string(dimension) + " index blocks");
  }
  for (Index i = 0; i < dimension; ++i) {
    if (cyl[i].size() != atom_count) {
      throw Error(ErrorKind::format, "cyl[" + std::to_string(i) + "]: expected " +
                                         std::to_string(atom_count) + " atom entries");
    }
    for (Atom a = 0; a < atom_count; ++a) {
      A.cyl_[i][a] = to_element(cyl[i][a], "cyl[" + std::to_string(i) + "][" + std::to_string(a) + "]");
    }
  }
  if (diag.size() != dimension) {
    throw Error(ErrorKind::format, "diag: expected " + std::to_string(dimension) + " rows");
  }
  for (Index i = 0; i < dimension; ++i) {
    if (diag[i].size() != dimension) {
      throw Error(ErrorKind::format, "diag: row " + std::to_string(i) + " is not total");
    }
    for (Index j = 0; j < dimension; ++j) {
      A.diag_[i][j] = to_element(diag[i][j], "diag[" + std::to_string(i) + "," + std::to_string(j) + "]");
    }
  }
  return A;
}

const Element& AtomStructure::cyl_image(Index i, Atom a) const {
  check_index(i);
  check_atom(a);
  return cyl_[i][a];
}

const Element& AtomStructure::diagonal(Index i, Index j) const {
  check_index(i);
  check_index(j);
  return diag_[i][j];
}

void AtomStructure::set_cyl_image(Index i, Atom a, Element image) {
  check_index(i);
  check_atom(a);
  if (image.universe() != atom_count_) throw Error(ErrorKind::arity_mismatch, "cylinder image universe");
  cyl_[i][a] = std::move(image);
}

void AtomStructure::set_diagonal(Index i, Index j, Element atoms) {
  check_index(i);
  check_index(j);
  if (atoms.universe() != atom_count_) throw Error(ErrorKind::arity_mismatch, "diagonal universe");
  diag_[i][j] = std::move(atoms);
}

const std::string& AtomStructure::name(Atom a) const {
  check_atom(a);
  return names_[a];
}

void AtomStructure::set_names(std::vector<std::string> names) {
  if (names.size() != atom_count_) {
    throw Error(ErrorKind::arity_mismatch, "expected " + std::to_string(atom_count_) + " atom names");
  }
  names_ = std::move(names);
}

Element AtomStructure::single(Atom a) const {
  check_atom(a);
  return Element::single(atom_count_, a);
}

void AtomStructure::check_index(Index i) const {
  if (i >= dimension_) {
    throw Error(ErrorKind::index_out_of_range,
                "index " + std::to_string(i) + " outside dimension " + std::to_string(dimension_));
  }
}

void AtomStructure::check_atom(Atom a) const {
  if (a >= atom_count_) {
    throw Error(ErrorKind::index_out_of_range,
                "atom " + std::to_string(a) + " outside atom count " + std::to_string(atom_count_));
  }
}

std::vector<Violation> wellformed(const AtomStructure& A) {
  std::vector<Violation> out;
  const Index n = A.dimension();
  if (n < 2) out.push_back({"dimension", "dimension must be at least 2"});
  if (A.atom_count() == 0) {
    out.push_back({"atom_count", "an algebra needs at least one atom"});
    return out;
  }
  const Element one = A.full();
  for (Index i = 0; i < n; ++i) {
    if (A.diagonal(i, i) != one) {
      out.push_back({"Ax4", "d_" + std::to_string(i) + std::to_string(i) + " is not the unit"});
    }
  }
  for (Index i = 0; i < n; ++i) {
    for (Atom a = 0; a < A.atom_count(); ++a) {
      const Element& img = A.cyl_image(i, a);
      if (!img.test(a)) {
        out.push_back({"reflexivity", "atom " + A.name(a) + " is not below c_" + std::to_string(i) +
                                          " of itself"});
      }
      for (Atom b = 0; b < A.atom_count(); ++b) {
        const bool below = img.test(b);
        const bool same = A.cyl_image(i, b) == img;
        if (below != same) {
          out.push_back({"aib", "c_" + std::to_string(i) + ": atom " + A.name(b) +
                                    (below ? " is below " : " is not below ") + "c_" +
                                    std::to_string(i) + " " + A.name(a) + " but the images " +
                                    (same ? "coincide" : "differ")});
        }
      }
    }
  }
  return out;
}

Element cyl(const AtomStructure& A, Index i, const Element& x) {
  A.check_index(i);
  Element out = A.empty();
  x.for_each([&](std::size_t a) { out |= A.cyl_image(i, static_cast<Atom>(a)); });
  return out;
}

Element s_subst(const AtomStructure& A, Index i, Index j, const Element& x) {
  A.check_index(i);
  A.check_index(j);
  if (i == j) return x;
  return cyl(A, i, x & A.diagonal(i, j));
}

Element diag_element(const AtomStructure& A, Index i, Index j) { return A.diagonal(i, j); }

std::optional<Atom> t_atom(const AtomStructure& A, Index i, Index j, Atom a) {
  A.check_index(i);
  A.check_index(j);
  A.check_atom(a);
  if (i == j) return a;
  const Element meet = A.cyl_image(i, a) & A.diagonal(i, j);
  const std::size_t c = meet.count();
  if (c == 0) return std::nullopt;
  if (c > 1) {
    throw Error(ErrorKind::axiom_violation,
                "t^" + std::to_string(i) + "_" + std::to_string(j) + " of atom " + A.name(a) +
                    " is not an atom (" + std::to_string(c) + " atoms below it)");
  }
  return static_cast<Atom>(meet.first());
}

Element p_elem(const AtomStructure& A, Index i, Index j, const Element& x) {
  A.check_index(i);
  A.check_index(j);
  if (i == j) return x;
  Element out = s_subst(A, i, j, cyl(A, j, x)) & s_subst(A, j, i, cyl(A, i, x));
  for (Index k = 0; k < A.dimension(); ++k) {
    if (k == i || k == j) continue;
    out &= s_subst(A, k, i, s_subst(A, i, j, s_subst(A, j, k, cyl(A, k, x))));
  }
  return out;
}

std::optional<Atom> tau_atom(const AtomStructure& A, std::span<const Replacement> word, Atom a) {
  std::optional<Atom> cur = a;
  for (const auto& r : word) {
    cur = t_atom(A, r.target, r.source, *cur);
    if (!cur) return std::nullopt;
  }
  return cur;
}

std::optional<Atom> tau_atom(const AtomStructure& A, const Transformation& tau, Atom a) {
  if (tau.arity() != A.dimension()) {
    throw Error(ErrorKind::arity_mismatch, "transformation arity differs from the dimension");
  }
  const auto word = decompose_replacements(tau);
  return tau_atom(A, word, a);
}

}  // namespace cylrep
