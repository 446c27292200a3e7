#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cylrep/algebra.hpp"

namespace cylrep {

using Edge = std::vector<NodeId>;

std::string edge_string(const Edge& e);

// Finite node set plus a partial labeling of n-tuples of nodes by atoms.
// Edges remember their insertion order.
class PreNetwork {
 public:
  PreNetwork() = default;
  explicit PreNetwork(Index arity) : arity_(arity), slices_(arity) {}

  Index arity() const noexcept { return arity_; }
  const std::set<NodeId>& nodes() const noexcept { return nodes_; }
  const std::vector<std::pair<Edge, Atom>>& edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  void add_node(NodeId u) { nodes_.insert(u); }
  // Adds the edge and its nodes. Returns false when the edge already carries
  // the same label; throws Error(merge_conflict) on a different label.
  bool add_edge(const Edge& e, Atom label);

  bool has_edge(const Edge& e) const { return index_.contains(e); }
  std::optional<Atom> label(const Edge& e) const;

  // Positions (in edges()) of the edges g with g = e(i/u) for some u,
  // including e itself when present.
  const std::vector<std::size_t>& slice(const Edge& e, Index i) const;

  friend bool operator==(const PreNetwork& a, const PreNetwork& b) {
    return a.arity_ == b.arity_ && a.nodes_ == b.nodes_ && a.labels() == b.labels();
  }

  std::map<Edge, Atom> labels() const;

 private:
  static Edge slice_key(const Edge& e, Index i);

  Index arity_ = 0;
  std::set<NodeId> nodes_;
  std::vector<std::pair<Edge, Atom>> edges_;
  std::map<Edge, std::size_t> index_;
  std::vector<std::map<Edge, std::vector<std::size_t>>> slices_;
};

struct Zigzag {
  std::vector<Edge> path;   // h_0 .. h_m
  std::vector<Index> steps; // i_1 .. i_m, h_{t-1} and h_t differ at most at steps[t-1]
};

struct NetworkReport {
  bool pass = true;
  std::string condition;  // "a", "b", "c" or "c'"
  std::string detail;
};

// N(f) <= d_ij iff f(i) = f(j), for every edge. Returns the first violating
// edge.
std::optional<Edge> condition_b(const AtomStructure& A, const PreNetwork& N);

// Closure of the edge set: none for rc, Omega_n for the diagonalizable
// classes, Lambda_n for the permutable ones. Returns a missing edge.
std::optional<Edge> closure_check(const PreNetwork& N, Klass klass);

// Shortest zigzag from f to g, searching only edges whose range contains
// Rng(f) & Rng(g). Neighbours are expanded in ascending tuple order.
std::optional<Zigzag> zigzag_search(const AtomStructure& A, const PreNetwork& N, const Edge& f,
                                    const Edge& g);

NetworkReport is_network(const AtomStructure& A, const PreNetwork& N, Klass klass);

// Networks for the *_minus classes: closure, condition (b) and
// N(f o [i/j]) = t^i_j N(f) wherever f o [i/j] is an edge.
NetworkReport is_modified_network(const AtomStructure& A, const PreNetwork& N, Klass klass);

// is_modified_network for the *_minus classes, is_network otherwise.
NetworkReport check_network(const AtomStructure& A, const PreNetwork& N, Klass klass);

// M(f, a). Throws Error(mosaic_failure) when the diagonal pattern of f does
// not match a, when a label is undefined, or when the finished mosaic breaks
// N(g o [i/j]) = t^i_j N(g); Error(axiom_violation) surfaces from t_atom.
PreNetwork build_mosaic(const AtomStructure& A, const Edge& f, Atom a, Klass klass);

PreNetwork merge(const PreNetwork& N, const PreNetwork& M);
// In-place merge; returns the edges that were new to `into`.
std::vector<std::pair<Edge, Atom>> merge_into(PreNetwork& into, const PreNetwork& M);

}  // namespace cylrep
