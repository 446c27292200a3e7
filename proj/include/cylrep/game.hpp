#pragma once

#include <deque>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "cylrep/network.hpp"

namespace cylrep {

// Move (a): some edge must be labeled by `atom`.
struct AtomWitness {
  Atom atom;
  friend auto operator<=>(const AtomWitness&, const AtomWitness&) = default;
};

// Move (b): some edge f(i/u) must be labeled by b, where b lies in the
// c_i class of the label of f.
struct CylWitness {
  Edge edge;
  Index i;
  Atom b;
  friend auto operator<=>(const CylWitness&, const CylWitness&) = default;
};

using Obligation = std::variant<AtomWitness, CylWitness>;

std::string to_string(const AtomStructure& A, const Obligation& ob);

struct Limits {
  std::size_t max_rounds = 10000;
  std::size_t max_nodes = 5000;
};

enum class PlayStatus { saturated, bounded };
std::string to_string(PlayStatus s);

struct RoundRecord {
  std::size_t round = 0;
  Obligation obligation;
  std::vector<NodeId> nodes_added;
  std::vector<std::pair<Edge, Atom>> edges_added;
};

struct PlayState {
  PlayState(Index n, Klass k, Limits l) : network(n), klass(k), limits(l) {}

  PreNetwork network;
  std::size_t round = 0;
  NodeId next_node = 0;
  std::deque<Obligation> queue;
  Klass klass;
  Limits limits;
};

struct PlayOptions {
  Limits limits;
  // Run check_network after every move; a failing check throws
  // Error(network_failure).
  bool debug_check_networks = false;
  std::function<void(const RoundRecord&)> on_round;
};

struct PlayOutcome {
  PlayStatus status = PlayStatus::bounded;
  PreNetwork network;
  std::vector<Obligation> unmet;
  std::size_t rounds = 0;
};

bool witnessed(const PreNetwork& N, const Obligation& ob);

// Unmet atom witnesses (ascending) followed by unmet cylinder witnesses
// (edges in insertion order, then index, then atom).
std::vector<Obligation> pending_obligations(const AtomStructure& A, const PreNetwork& N,
                                            Klass klass);

// The strategy for the second player. Met obligations leave the state
// unchanged. Merge conflicts and mosaic failures propagate as errors.
PlayState exists_move(const AtomStructure& A, const PlayState& state, const Obligation& ob);
// In-place variant; reports what was added.
RoundRecord apply_move(const AtomStructure& A, PlayState& state, const Obligation& ob);

PlayOutcome run_to_saturation(const AtomStructure& A, Klass klass, const PlayOptions& options = {});

}  // namespace cylrep
