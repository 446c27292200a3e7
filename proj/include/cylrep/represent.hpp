#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cylrep/game.hpp"

namespace cylrep {

struct Representation {
  Index n = 0;
  std::vector<NodeId> base;   // ascending
  std::vector<Edge> unit;
  std::vector<Atom> labels;   // labels[k] labels unit[k]
  PlayStatus status = PlayStatus::bounded;
};

Representation to_representation(const PlayOutcome& outcome);
Representation build_representation(const AtomStructure& A, Klass klass,
                                    const PlayOptions& options = {});

// The edges of the unit whose label lies in x.
std::set<Edge> psi(const AtomStructure& A, const Representation& rep, const Element& x);

struct EmbeddingCheck {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct EmbeddingReport {
  bool saturated = false;
  std::vector<EmbeddingCheck> checks;
  bool pass() const;
};

// `samples` random element pairs drive the Boolean-homomorphism check.
EmbeddingReport verify_embedding(const AtomStructure& A, const Representation& rep,
                                 std::size_t samples = 32, unsigned seed = 7);

struct ConcreteUnit {
  Index n = 0;
  std::vector<std::string> base;
  std::vector<std::vector<Index>> sequences;
};

enum class UnitClosure { diagonalizable, permutable };

// Atoms are the distinct sequences in lexicographic order, named "(x,y,..)".
// With an expected diagonalizable or permutable class the unit must already
// be closed; Error(closure_violation) names a missing sequence.
AtomStructure import_unit(const ConcreteUnit& u, std::optional<Klass> expect = std::nullopt);

ConcreteUnit close_unit(const ConcreteUnit& u, UnitClosure kind);

// Sequences are kept sorted and unique.
ConcreteUnit normalized(ConcreteUnit u);

}  // namespace cylrep
