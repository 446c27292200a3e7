#pragma once

#include <string>
#include <vector>

#include "cylrep/algebra.hpp"
#include "cylrep/term.hpp"

namespace cylrep {

// lhs <= rhs. Equations are carried as two inequalities.
//
// atomwise_valid declares lhs additive (and normal) in each variable and rhs
// monotone, so checking single-atom assignments decides the inequality.
struct Inequality {
  std::string axiom;  // family, e.g. "Ax3"
  std::string label;  // instance, e.g. "Ax3[i=0] <="
  Term lhs;
  Term rhs;
  bool atomwise_valid = true;
};

struct CheckResult {
  bool holds = true;
  Env counterexample;  // empty when holds
  Element excess;      // lhs - rhs at the counterexample
};

CheckResult holds_atomwise(const AtomStructure& A, const Inequality& ineq);

// Tries every element for every variable. Throws Error(bound_exceeded) above
// atom_bound atoms.
CheckResult holds_exhaustive(const AtomStructure& A, const Inequality& ineq,
                             std::size_t atom_bound = 10);

// Reading of the (Ax7) side condition k_{t+1} not in tau_t^* K for t < m:
// include_t0 also enforces it at t = 0 with tau_0 the identity.
enum class Ax7Mode { skip_t0, include_t0 };

std::string_view to_string(Ax7Mode mode);
std::optional<Ax7Mode> parse_ax7_mode(std::string_view s);

struct Ax7Instance {
  std::vector<Index> is;  // i_1 ... i_m
  std::vector<Index> js;  // j_1 ... j_m
  std::vector<Index> ks;  // k_1 ... k_m
  Index target = 0;       // i
  Transformation tau = Transformation::identity(2);  // [i_m/j_m] o ... o [i_1/j_1]
  std::vector<Index> K;   // {i_1..i_m, k_1..k_m} \ {i}, ascending

  std::size_t length() const noexcept { return is.size(); }
  Inequality compile() const;
};

// Instances with 1 <= m <= m_max, grouped by m and in lexicographic order of
// (i's, j's, k's, target) within each m.
std::vector<Ax7Instance> ax7_instances(Index n, std::size_t m_max, Ax7Mode mode);

struct Catalog {
  Klass klass = Klass::rc;
  Index dimension = 2;
  std::vector<Inequality> axioms;
  bool ax7 = false;  // the (Ax7) schema applies on top of the listed axioms
};

Catalog catalog(Klass klass, Index n);

struct ValidateOptions {
  std::size_t ax7_depth = 3;
  Ax7Mode ax7_mode = Ax7Mode::include_t0;
  // Cross-check every verdict with holds_exhaustive when the structure has
  // at most oracle_atom_bound atoms.
  bool use_oracle = false;
  std::size_t oracle_atom_bound = 6;
};

struct AxiomFailure {
  std::string label;
  Env counterexample;
  Element excess;
};

struct AxiomVerdict {
  std::string axiom;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::vector<AxiomFailure> examples;  // first few failures

  bool pass() const noexcept { return failures == 0; }
};

struct ValidationReport {
  Klass klass = Klass::rc;
  std::vector<Violation> structure;
  std::vector<AxiomVerdict> axioms;  // catalog order, then Ax7
  bool oracle_used = false;
  std::size_t oracle_disagreements = 0;

  bool pass() const;
  const AxiomVerdict* find(std::string_view axiom) const;
};

ValidationReport validate(const AtomStructure& A, Klass klass, const ValidateOptions& opts = {});

}  // namespace cylrep
