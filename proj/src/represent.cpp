#include "cylrep/represent.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace cylrep {

Representation to_representation(const PlayOutcome& outcome) {
  Representation rep;
  rep.n = outcome.network.arity();
  rep.status = outcome.status;
  std::set<NodeId> base;
  for (const auto& [e, a] : outcome.network.edges()) {
    rep.unit.push_back(e);
    rep.labels.push_back(a);
    base.insert(e.begin(), e.end());
  }
  rep.base.assign(base.begin(), base.end());
  return rep;
}

Representation build_representation(const AtomStructure& A, Klass klass, const PlayOptions& options) {
  return to_representation(run_to_saturation(A, klass, options));
}

std::set<Edge> psi(const AtomStructure& A, const Representation& rep, const Element& x) {
  if (x.universe() != A.atom_count()) throw Error(ErrorKind::arity_mismatch, "element over the wrong atom set");
  std::set<Edge> out;
  for (std::size_t k = 0; k < rep.unit.size(); ++k) {
    if (x.test(rep.labels[k])) out.insert(rep.unit[k]);
  }
  return out;
}

bool EmbeddingReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

namespace {

std::set<Edge> unite(const std::set<Edge>& a, const std::set<Edge>& b) {
  std::set<Edge> out = a;
  out.insert(b.begin(), b.end());
  return out;
}

std::set<Edge> meet(const std::set<Edge>& a, const std::set<Edge>& b) {
  std::set<Edge> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

std::set<Edge> minus(const std::set<Edge>& a, const std::set<Edge>& b) {
  std::set<Edge> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

}  // namespace

EmbeddingReport verify_embedding(const AtomStructure& A, const Representation& rep,
                                 std::size_t samples, unsigned seed) {
  EmbeddingReport report;
  report.saturated = rep.status == PlayStatus::saturated;
  const Index n = A.dimension();
  const std::size_t atoms = A.atom_count();

  EmbeddingCheck complete{"completeness", true, ""};
  if (rep.n != n || rep.labels.size() != rep.unit.size()) {
    complete = {"completeness", false, "representation does not match the algebra"};
    report.checks.push_back(complete);
    return report;
  }
  std::map<Edge, Atom> label;
  for (std::size_t k = 0; k < rep.unit.size() && complete.pass; ++k) {
    const Edge& f = rep.unit[k];
    if (f.size() != n) {
      complete = {"completeness", false, "unit entry " + edge_string(f) + " has the wrong length"};
    } else if (rep.labels[k] >= atoms) {
      complete = {"completeness", false, "label of " + edge_string(f) + " is not an atom"};
    } else if (!label.emplace(f, rep.labels[k]).second) {
      complete = {"completeness", false, "unit entry " + edge_string(f) + " is labeled twice"};
    }
  }
  report.checks.push_back(complete);
  if (!complete.pass) return report;

  EmbeddingCheck inj{"injectivity", true, ""};
  std::vector<bool> used(atoms, false);
  for (Atom a : rep.labels) used[a] = true;
  for (Atom a = 0; a < atoms; ++a) {
    if (!used[a]) {
      inj = {"injectivity", false, "psi of atom " + A.name(a) + " is empty"};
      break;
    }
  }
  report.checks.push_back(inj);

  for (Index i = 0; i < n; ++i) {
    // Labels present in each i-class of the unit.
    std::map<Edge, Element> present;
    auto key = [&](Edge f) {
      f[i] = static_cast<NodeId>(-1);
      return f;
    };
    for (const auto& [f, a] : label) {
      auto [it, _] = present.try_emplace(key(f), A.empty());
      it->second.set(a);
    }
    EmbeddingCheck c{"cylinder[" + std::to_string(i) + "]", true, ""};
    for (Atom a = 0; a < atoms && c.pass; ++a) {
      const Element& image = A.cyl_image(i, a);
      for (const auto& [f, b] : label) {
        const bool lhs = image.test(b);
        const bool rhs = present.at(key(f)).test(a);
        if (lhs != rhs) {
          c.pass = false;
          c.detail = edge_string(f) + (lhs ? " is in psi(c_" : " is missing from psi(c_") +
                     std::to_string(i) + " " + A.name(a) + ")" +
                     (lhs ? " but has no " : " but has an ") + std::to_string(i) +
                     "-neighbour labeled " + A.name(a);
          break;
        }
      }
    }
    report.checks.push_back(c);
  }

  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      EmbeddingCheck c{"diagonal[" + std::to_string(i) + "," + std::to_string(j) + "]", true, ""};
      for (const auto& [f, b] : label) {
        if (A.diagonal(i, j).test(b) != (f[i] == f[j])) {
          c.pass = false;
          c.detail = "edge " + edge_string(f) + " labeled " + A.name(b);
          break;
        }
      }
      report.checks.push_back(c);
    }
  }

  EmbeddingCheck hom{"boolean-homomorphism", true, ""};
  std::mt19937 rng(seed);
  std::bernoulli_distribution coin(0.5);
  std::set<Edge> all;
  for (const auto& [f, b] : label) all.insert(f);
  for (std::size_t s = 0; s < samples && hom.pass; ++s) {
    Element x = A.empty(), y = A.empty();
    for (Atom a = 0; a < atoms; ++a) {
      if (coin(rng)) x.set(a);
      if (coin(rng)) y.set(a);
    }
    Element xy = x, x_and_y = x;
    xy |= y;
    x_and_y &= y;
    const auto px = psi(A, rep, x), py = psi(A, rep, y);
    if (psi(A, rep, xy) != unite(px, py)) hom = {hom.name, false, "join not preserved"};
    else if (psi(A, rep, x_and_y) != meet(px, py)) hom = {hom.name, false, "meet not preserved"};
    else if (psi(A, rep, ~x) != minus(all, px)) hom = {hom.name, false, "complement not preserved"};
  }
  if (psi(A, rep, A.full()) != all || !psi(A, rep, A.empty()).empty()) {
    hom = {hom.name, false, "bounds not preserved"};
  }
  report.checks.push_back(hom);
  return report;
}

ConcreteUnit normalized(ConcreteUnit u) {
  std::sort(u.sequences.begin(), u.sequences.end());
  u.sequences.erase(std::unique(u.sequences.begin(), u.sequences.end()), u.sequences.end());
  return u;
}

namespace {

void check_unit(const ConcreteUnit& u) {
  if (u.n == 0) throw Error(ErrorKind::invalid_argument, "unit dimension must be positive");
  if (u.sequences.empty()) throw Error(ErrorKind::invalid_argument, "unit is empty");
  for (const auto& s : u.sequences) {
    if (s.size() != u.n) throw Error(ErrorKind::arity_mismatch, "sequence of the wrong length in unit");
    for (Index x : s) {
      if (x >= u.base.size()) throw Error(ErrorKind::index_out_of_range, "sequence entry outside the base");
    }
  }
}

std::string sequence_name(const ConcreteUnit& u, const std::vector<Index>& s) {
  std::string out = "(";
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k) out += ',';
    out += u.base[s[k]];
  }
  return out + ")";
}

}  // namespace

AtomStructure import_unit(const ConcreteUnit& raw, std::optional<Klass> expect) {
  check_unit(raw);
  const ConcreteUnit u = normalized(raw);
  const Index n = u.n;
  const auto& seqs = u.sequences;

  if (expect && diagonal_closed(*expect)) {
    const auto family = n >= 2 ? enumerate(n, permutation_closed(*expect) ? TransformFamily::all
                                                                          : TransformFamily::omega)
                               : std::vector<Transformation>{};
    for (const auto& s : seqs) {
      for (const auto& tau : family) {
        auto g = apply_to_sequence(s, tau);
        if (!std::binary_search(seqs.begin(), seqs.end(), g)) {
          throw Error(ErrorKind::closure_violation,
                      "unit is not closed for " + std::string(to_string(*expect)) + ": " + sequence_name(u, s) +
                          " o " + tau.to_string() + " = " + sequence_name(u, g) + " is missing");
        }
      }
    }
  }

  AtomStructure A(n, seqs.size());
  std::vector<std::string> names;
  for (const auto& s : seqs) names.push_back(sequence_name(u, s));
  A.set_names(std::move(names));

  for (Index i = 0; i < n; ++i) {
    std::map<std::vector<Index>, Element> classes;
    auto key = [&](std::vector<Index> s) {
      s[i] = static_cast<Index>(-1);
      return s;
    };
    for (Atom a = 0; a < seqs.size(); ++a) {
      classes.try_emplace(key(seqs[a]), A.empty()).first->second.set(a);
    }
    for (Atom a = 0; a < seqs.size(); ++a) A.set_cyl_image(i, a, classes.at(key(seqs[a])));
  }
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      Element d = A.empty();
      for (Atom a = 0; a < seqs.size(); ++a) {
        if (seqs[a][i] == seqs[a][j]) d.set(a);
      }
      A.set_diagonal(i, j, std::move(d));
    }
  }
  return A;
}

ConcreteUnit close_unit(const ConcreteUnit& u, UnitClosure kind) {
  check_unit(u);
  ConcreteUnit out = u;
  if (u.n >= 2) {
    const auto family =
        enumerate(u.n, kind == UnitClosure::permutable ? TransformFamily::all : TransformFamily::omega);
    for (const auto& s : u.sequences) {
      for (const auto& tau : family) out.sequences.push_back(apply_to_sequence(s, tau));
    }
  }
  return normalized(std::move(out));
}

}  // namespace cylrep
