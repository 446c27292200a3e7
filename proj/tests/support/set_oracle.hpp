#pragma once

// Brute-force set-algebra semantics over a concrete unit, used as an
// independent reference for the atom-structure computations.

#include <algorithm>
#include <set>
#include <vector>

#include "cylrep/represent.hpp"

namespace oracle {

using Seq = std::vector<cylrep::Index>;
using Set = std::set<Seq>;

struct SetAlgebra {
  cylrep::Index n;
  Set unit;

  explicit SetAlgebra(const cylrep::ConcreteUnit& u) : n(u.n), unit(u.sequences.begin(), u.sequences.end()) {}

  static bool equiv(const Seq& f, const Seq& g, cylrep::Index i) {
    for (cylrep::Index k = 0; k < f.size(); ++k) {
      if (k != i && f[k] != g[k]) return false;
    }
    return true;
  }

  // C_i X = {f in V : some g in X with f ==_i g}
  Set C(cylrep::Index i, const Set& X) const {
    Set out;
    for (const auto& f : unit) {
      for (const auto& g : X) {
        if (equiv(f, g, i)) {
          out.insert(f);
          break;
        }
      }
    }
    return out;
  }

  Set D(cylrep::Index i, cylrep::Index j) const {
    Set out;
    for (const auto& f : unit) {
      if (f[i] == f[j]) out.insert(f);
    }
    return out;
  }

  // {f in V : f o sigma in X}, where sigma is given by its images.
  Set pullback(const Seq& sigma, const Set& X) const {
    Set out;
    for (const auto& f : unit) {
      Seq g(n);
      for (cylrep::Index k = 0; k < n; ++k) g[k] = f[sigma[k]];
      if (X.contains(g)) out.insert(f);
    }
    return out;
  }

  static Seq replacement(cylrep::Index n, cylrep::Index i, cylrep::Index j) {
    Seq s(n);
    for (cylrep::Index k = 0; k < n; ++k) s[k] = k;
    s[i] = j;
    return s;
  }

  static Seq transposition(cylrep::Index n, cylrep::Index i, cylrep::Index j) {
    Seq s = replacement(n, i, j);
    s[j] = i;
    return s;
  }
};

inline Set meet(const Set& a, const Set& b) {
  Set out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

// Element over the imported structure <-> set of sequences. import_unit
// orders atoms as the sorted, deduplicated sequences.
inline std::vector<Seq> atoms_of(const cylrep::ConcreteUnit& u) {
  return cylrep::normalized(u).sequences;
}

inline Set to_set(const std::vector<Seq>& atoms, const cylrep::Element& x) {
  Set out;
  x.for_each([&](std::size_t a) { out.insert(atoms[a]); });
  return out;
}

inline cylrep::Element to_element(const std::vector<Seq>& atoms, const Set& X) {
  cylrep::Element e(atoms.size());
  for (std::size_t a = 0; a < atoms.size(); ++a) {
    if (X.contains(atoms[a])) e.set(a);
  }
  return e;
}

// Units over base^n given by a bitmask over the lexicographic list of all
// sequences.
inline std::vector<Seq> all_sequences(cylrep::Index n, cylrep::Index base) {
  std::vector<Seq> out;
  Seq s(n, 0);
  for (;;) {
    out.push_back(s);
    cylrep::Index k = n;
    while (k > 0 && ++s[k - 1] == base) s[--k] = 0;
    if (k == 0) return out;
  }
}

inline cylrep::ConcreteUnit unit_from_mask(cylrep::Index n, cylrep::Index base, unsigned long long mask) {
  cylrep::ConcreteUnit u;
  u.n = n;
  for (cylrep::Index b = 0; b < base; ++b) u.base.push_back(std::to_string(b));
  const auto all = all_sequences(n, base);
  for (std::size_t k = 0; k < all.size(); ++k) {
    if (mask >> k & 1) u.sequences.push_back(all[k]);
  }
  return u;
}

inline bool is_closed(const cylrep::ConcreteUnit& u, cylrep::UnitClosure kind) {
  return cylrep::close_unit(u, kind).sequences == cylrep::normalized(u).sequences;
}

inline cylrep::ConcreteUnit full_square() { return unit_from_mask(2, 2, 0xF); }

}  // namespace oracle
