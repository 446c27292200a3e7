#include "cylrep/game.hpp"

#include <algorithm>

namespace cylrep {

std::string to_string(const AtomStructure& A, const Obligation& ob) {
  if (const auto* a = std::get_if<AtomWitness>(&ob)) return "atom " + A.name(a->atom);
  const auto& c = std::get<CylWitness>(ob);
  return "cyl " + edge_string(c.edge) + " i=" + std::to_string(c.i) + " b=" + A.name(c.b);
}

std::string to_string(PlayStatus s) { return s == PlayStatus::saturated ? "saturated" : "bounded"; }

bool witnessed(const PreNetwork& N, const Obligation& ob) {
  if (const auto* a = std::get_if<AtomWitness>(&ob)) {
    return std::any_of(N.edges().begin(), N.edges().end(),
                       [&](const auto& e) { return e.second == a->atom; });
  }
  const auto& c = std::get<CylWitness>(ob);
  for (std::size_t pos : N.slice(c.edge, c.i)) {
    if (N.edges()[pos].second == c.b) return true;
  }
  return false;
}

namespace {

void cyl_obligations(const AtomStructure& A, const PreNetwork& N, const Edge& f, Atom label,
                     std::vector<Obligation>& out) {
  for (Index i = 0; i < N.arity(); ++i) {
    A.cyl_image(i, label).for_each([&](std::size_t b) {
      CylWitness ob{f, i, static_cast<Atom>(b)};
      if (!witnessed(N, ob)) out.emplace_back(std::move(ob));
    });
  }
}

}  // namespace

std::vector<Obligation> pending_obligations(const AtomStructure& A, const PreNetwork& N, Klass) {
  std::vector<Obligation> out;
  std::vector<bool> seen(A.atom_count(), false);
  for (const auto& [e, a] : N.edges()) seen[a] = true;
  for (Atom a = 0; a < A.atom_count(); ++a) {
    if (!seen[a]) out.emplace_back(AtomWitness{a});
  }
  for (const auto& [e, a] : N.edges()) cyl_obligations(A, N, e, a, out);
  return out;
}

RoundRecord apply_move(const AtomStructure& A, PlayState& state, const Obligation& ob) {
  RoundRecord rec{state.round, ob, {}, {}};
  if (witnessed(state.network, ob)) return rec;
  const Index n = A.dimension();
  auto fresh = [&] {
    const NodeId u = state.next_node++;
    rec.nodes_added.push_back(u);
    return u;
  };

  Edge gen;
  Atom atom;
  if (const auto* aw = std::get_if<AtomWitness>(&ob)) {
    atom = aw->atom;
    A.check_atom(atom);
    gen.resize(n);
    for (Index k = 0; k < n; ++k) {
      Index j = 0;
      while (j < k && !A.diagonal(k, j).test(atom)) ++j;
      gen[k] = j < k ? gen[j] : fresh();
    }
  } else {
    const auto& c = std::get<CylWitness>(ob);
    atom = c.b;
    A.check_atom(atom);
    gen = c.edge;
    Index j = 0;
    while (j < n && (j == c.i || !A.diagonal(c.i, j).test(atom))) ++j;
    if (j < n) {
      gen[c.i] = c.edge[j];
      if (auto old = state.network.label(gen); old && *old != atom) {
        throw Error(ErrorKind::merge_conflict,
                    "edge " + edge_string(gen) + " is labeled " + A.name(*old) + " but " +
                        to_string(A, ob) + " requires " + A.name(atom));
      }
    } else {
      gen[c.i] = fresh();
    }
  }

  PreNetwork M = build_mosaic(A, gen, atom, state.klass);
  rec.edges_added = merge_into(state.network, M);
  return rec;
}

PlayState exists_move(const AtomStructure& A, const PlayState& state, const Obligation& ob) {
  PlayState next = state;
  apply_move(A, next, ob);
  ++next.round;
  return next;
}

PlayOutcome run_to_saturation(const AtomStructure& A, Klass klass, const PlayOptions& options) {
  PlayState state(A.dimension(), klass, options.limits);
  for (auto& ob : pending_obligations(A, state.network, klass)) state.queue.push_back(std::move(ob));

  auto bounded = [&] {
    return PlayOutcome{PlayStatus::bounded, state.network,
                       pending_obligations(A, state.network, klass), state.round};
  };

  for (;;) {
    while (!state.queue.empty()) {
      Obligation ob = std::move(state.queue.front());
      state.queue.pop_front();
      if (witnessed(state.network, ob)) continue;
      if (state.round >= options.limits.max_rounds ||
          state.network.nodes().size() >= options.limits.max_nodes) {
        state.queue.push_front(std::move(ob));
        return bounded();
      }
      RoundRecord rec = apply_move(A, state, ob);
      ++state.round;
      std::vector<Obligation> fresh;
      for (const auto& [e, a] : rec.edges_added) cyl_obligations(A, state.network, e, a, fresh);
      for (auto& f : fresh) state.queue.push_back(std::move(f));
      if (options.debug_check_networks) {
        NetworkReport r = check_network(A, state.network, klass);
        if (!r.pass) {
          throw Error(ErrorKind::network_failure, "round " + std::to_string(rec.round) +
                                                      " (" + to_string(A, ob) + "): condition " +
                                                      r.condition + ": " + r.detail);
        }
      }
      if (options.on_round) options.on_round(rec);
    }
    auto rest = pending_obligations(A, state.network, klass);
    if (rest.empty()) break;
    for (auto& ob : rest) state.queue.push_back(std::move(ob));
  }
  return PlayOutcome{PlayStatus::saturated, state.network, {}, state.round};
}

}  // namespace cylrep
