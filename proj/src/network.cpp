#include "cylrep/network.hpp"

#include <algorithm>
#include <deque>
#include <mutex>

namespace cylrep {

namespace {

struct Families {
  std::vector<Transformation> omega;
  std::vector<std::vector<Replacement>> omega_words;
  std::vector<Transformation> all;
  PermutationChain chain;
};

const Families& families(Index n) {
  static std::mutex mu;
  static std::map<Index, Families> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    Families f;
    f.omega = enumerate(n, TransformFamily::omega);
    for (const auto& t : f.omega) f.omega_words.push_back(decompose_replacements(t));
    f.all = enumerate(n, TransformFamily::all);
    f.chain = permutation_chain(n);
    it = cache.emplace(n, std::move(f)).first;
  }
  return it->second;
}

std::vector<NodeId> range_of(const Edge& e) {
  std::vector<NodeId> r(e.begin(), e.end());
  std::sort(r.begin(), r.end());
  r.erase(std::unique(r.begin(), r.end()), r.end());
  return r;
}

std::vector<NodeId> intersect(const std::vector<NodeId>& a, const std::vector<NodeId>& b) {
  std::vector<NodeId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool contains_all(const Edge& e, const std::vector<NodeId>& s) {
  return std::all_of(s.begin(), s.end(),
                     [&](NodeId u) { return std::find(e.begin(), e.end(), u) != e.end(); });
}

Edge with(const Edge& e, Index i, NodeId u) {
  Edge out = e;
  out[i] = u;
  return out;
}

NetworkReport fail(std::string condition, std::string detail) {
  return NetworkReport{false, std::move(condition), std::move(detail)};
}

}  // namespace

std::string edge_string(const Edge& e) {
  std::string s = "(";
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(e[k]);
  }
  return s + ")";
}

bool PreNetwork::add_edge(const Edge& e, Atom label) {
  if (e.size() != arity_) {
    throw Error(ErrorKind::arity_mismatch, "edge " + edge_string(e) + " has the wrong length");
  }
  if (auto it = index_.find(e); it != index_.end()) {
    const Atom old = edges_[it->second].second;
    if (old != label) {
      throw Error(ErrorKind::merge_conflict, "edge " + edge_string(e) + " labeled " +
                                                 std::to_string(old) + " and " + std::to_string(label));
    }
    return false;
  }
  const std::size_t pos = edges_.size();
  edges_.emplace_back(e, label);
  index_.emplace(e, pos);
  for (NodeId u : e) nodes_.insert(u);
  for (Index i = 0; i < arity_; ++i) slices_[i][slice_key(e, i)].push_back(pos);
  return true;
}

std::optional<Atom> PreNetwork::label(const Edge& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) return std::nullopt;
  return edges_[it->second].second;
}

const std::vector<std::size_t>& PreNetwork::slice(const Edge& e, Index i) const {
  static const std::vector<std::size_t> none;
  auto it = slices_.at(i).find(slice_key(e, i));
  return it == slices_[i].end() ? none : it->second;
}

std::map<Edge, Atom> PreNetwork::labels() const {
  std::map<Edge, Atom> out;
  for (const auto& [e, a] : edges_) out.emplace(e, a);
  return out;
}

Edge PreNetwork::slice_key(const Edge& e, Index i) {
  Edge k = e;
  k[i] = static_cast<NodeId>(-1);
  return k;
}

std::optional<Edge> condition_b(const AtomStructure& A, const PreNetwork& N) {
  const Index n = N.arity();
  for (const auto& [f, a] : N.edges()) {
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) {
        if (A.diagonal(i, j).test(a) != (f[i] == f[j])) return f;
      }
    }
  }
  return std::nullopt;
}

std::optional<Edge> closure_check(const PreNetwork& N, Klass klass) {
  if (!diagonal_closed(klass) || N.edge_count() == 0) return std::nullopt;
  const auto& fam = families(N.arity());
  const auto& taus = permutation_closed(klass) ? fam.all : fam.omega;
  for (const auto& [f, a] : N.edges()) {
    for (const auto& tau : taus) {
      Edge g = apply_to_sequence(f, tau);
      if (!N.has_edge(g)) return g;
    }
  }
  return std::nullopt;
}

std::optional<Zigzag> zigzag_search(const AtomStructure& A, const PreNetwork& N, const Edge& f,
                                    const Edge& g) {
  if (!N.has_edge(f) || !N.has_edge(g)) return std::nullopt;
  if (f == g) return Zigzag{{f}, {}};
  const auto common = intersect(range_of(f), range_of(g));
  const Index n = N.arity();

  std::map<Edge, std::pair<Edge, Index>> parent;
  std::deque<Edge> queue{f};
  parent.emplace(f, std::pair{f, Index{0}});
  while (!queue.empty()) {
    const Edge h = queue.front();
    queue.pop_front();
    const Atom lh = *N.label(h);
    std::vector<std::pair<Edge, Index>> next;
    for (Index i = 0; i < n; ++i) {
      for (std::size_t pos : N.slice(h, i)) {
        const auto& [h2, l2] = N.edges()[pos];
        if (h2 == h || parent.contains(h2) || !contains_all(h2, common)) continue;
        if (A.cyl_image(i, lh) != A.cyl_image(i, l2)) continue;
        next.emplace_back(h2, i);
      }
    }
    std::sort(next.begin(), next.end());
    for (auto& [h2, i] : next) {
      if (parent.contains(h2)) continue;
      parent.emplace(h2, std::pair{h, i});
      if (h2 == g) {
        Zigzag z;
        Edge cur = g;
        while (cur != f) {
          const auto& [prev, step] = parent.at(cur);
          z.path.push_back(cur);
          z.steps.push_back(step);
          cur = prev;
        }
        z.path.push_back(f);
        std::reverse(z.path.begin(), z.path.end());
        std::reverse(z.steps.begin(), z.steps.end());
        return z;
      }
      queue.push_back(h2);
    }
  }
  return std::nullopt;
}

namespace {

// Condition (c) via connected components of the zigzag graph restricted to
// edges above each required range intersection.
NetworkReport check_zigzags(const AtomStructure& A, const PreNetwork& N) {
  const Index n = N.arity();
  const auto& edges = N.edges();
  std::vector<std::vector<NodeId>> ranges;
  ranges.reserve(edges.size());
  for (const auto& [e, a] : edges) ranges.push_back(range_of(e));

  std::map<NodeId, std::vector<std::size_t>> by_node;
  for (std::size_t p = 0; p < edges.size(); ++p) {
    for (NodeId u : ranges[p]) by_node[u].push_back(p);
  }

  std::map<std::vector<NodeId>, std::vector<std::pair<std::size_t, std::size_t>>> pairs;
  for (const auto& [u, list] : by_node) {
    for (std::size_t x = 0; x < list.size(); ++x) {
      for (std::size_t y = x + 1; y < list.size(); ++y) {
        auto s = intersect(ranges[list[x]], ranges[list[y]]);
        if (s.front() != u || s.size() >= n) continue;
        pairs[std::move(s)].emplace_back(list[x], list[y]);
      }
    }
  }

  for (const auto& [s, todo] : pairs) {
    std::map<std::size_t, std::size_t> component;
    std::size_t next_id = 0;
    auto above = [&](std::size_t p) { return std::includes(ranges[p].begin(), ranges[p].end(), s.begin(), s.end()); };
    auto flood = [&](std::size_t start) {
      const std::size_t id = next_id++;
      std::deque<std::size_t> queue{start};
      component[start] = id;
      while (!queue.empty()) {
        const std::size_t p = queue.front();
        queue.pop_front();
        const auto& [h, lh] = edges[p];
        for (Index i = 0; i < n; ++i) {
          for (std::size_t q : N.slice(h, i)) {
            if (q == p || component.contains(q) || !above(q)) continue;
            if (A.cyl_image(i, lh) != A.cyl_image(i, edges[q].second)) continue;
            component[q] = id;
            queue.push_back(q);
          }
        }
      }
    };
    for (auto [p, q] : todo) {
      if (!component.contains(p)) flood(p);
      if (component.at(p) != (component.contains(q) ? component.at(q) : static_cast<std::size_t>(-1))) {
        return fail("c", "no zigzag from " + edge_string(edges[p].first) + " to " +
                             edge_string(edges[q].first));
      }
    }
  }
  return {};
}

}  // namespace

NetworkReport is_network(const AtomStructure& A, const PreNetwork& N, Klass klass) {
  if (auto missing = closure_check(N, klass)) {
    return fail("a", "edge set not closed: missing " + edge_string(*missing));
  }
  if (auto bad = condition_b(A, N)) {
    return fail("b", "diagonal pattern of " + edge_string(*bad) + " disagrees with its label");
  }
  return check_zigzags(A, N);
}

NetworkReport is_modified_network(const AtomStructure& A, const PreNetwork& N, Klass klass) {
  if (auto missing = closure_check(N, klass)) {
    return fail("a", "edge set not closed: missing " + edge_string(*missing));
  }
  if (auto bad = condition_b(A, N)) {
    return fail("b", "diagonal pattern of " + edge_string(*bad) + " disagrees with its label");
  }
  const Index n = N.arity();
  for (const auto& [f, a] : N.edges()) {
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) {
        if (i == j) continue;
        auto g = with(f, i, f[j]);
        auto lg = N.label(g);
        if (!lg) continue;
        std::optional<Atom> expect;
        try {
          expect = t_atom(A, i, j, a);
        } catch (const Error& e) {
          return fail("c'", e.what());
        }
        if (expect != lg) {
          return fail("c'", "label of " + edge_string(g) + " is not t^" + std::to_string(i) + "_" +
                                std::to_string(j) + " of the label of " + edge_string(f));
        }
      }
    }
  }
  return {};
}

NetworkReport check_network(const AtomStructure& A, const PreNetwork& N, Klass klass) {
  return modified(klass) ? is_modified_network(A, N, klass) : is_network(A, N, klass);
}

PreNetwork build_mosaic(const AtomStructure& A, const Edge& f, Atom a, Klass klass) {
  const Index n = A.dimension();
  if (f.size() != n) throw Error(ErrorKind::arity_mismatch, "mosaic generator has the wrong length");
  A.check_atom(a);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      if ((f[i] == f[j]) != A.diagonal(i, j).test(a)) {
        throw Error(ErrorKind::mosaic_failure,
                    "generator " + edge_string(f) + " does not match the diagonal pattern of atom " +
                        A.name(a) + " at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }

  PreNetwork M(n);
  M.add_edge(f, a);
  if (!diagonal_closed(klass)) return M;

  auto put = [&](const Edge& g, Atom b, const char* how) {
    try {
      M.add_edge(g, b);
    } catch (const Error&) {
      throw Error(ErrorKind::mosaic_failure, std::string("inconsistent ") + how + " label for " +
                                                 edge_string(g) + " in M(" + edge_string(f) + ", " +
                                                 A.name(a) + ")");
    }
  };

  const auto& fam = families(n);
  for (std::size_t k = 0; k < fam.omega.size(); ++k) {
    auto b = tau_atom(A, fam.omega_words[k], a);
    if (!b) {
      throw Error(ErrorKind::mosaic_failure, "tau^A " + A.name(a) + " is 0 for tau = " +
                                                 fam.omega[k].to_string());
    }
    put(apply_to_sequence(f, fam.omega[k]), *b, "substitution");
  }

  const bool injective = range_of(f).size() == n;
  if (permutation_closed(klass) && injective) {
    const auto& chain = fam.chain.entries;
    std::vector<Atom> label(chain.size());
    label[0] = a;
    for (std::size_t e = 1; e < chain.size(); ++e) {
      const auto [k, l] = *chain[e].transposition;
      const Atom from = label[*chain[e].parent];
      const Element choices = p_elem(A, k, l, A.single(from));
      if (choices.empty()) {
        throw Error(ErrorKind::mosaic_failure, "p_" + std::to_string(k) + std::to_string(l) +
                                                   " of atom " + A.name(from) + " is 0");
      }
      label[e] = static_cast<Atom>(choices.first());
      put(apply_to_sequence(f, chain[e].permutation), label[e], "transposition");
    }
  }

  // N(g o [i/j]) = t^i_j N(g) on every edge.
  for (const auto& [g, b] : M.edges()) {
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) {
        if (i == j) continue;
        auto lg = M.label(with(g, i, g[j]));
        if (!lg) {
          throw Error(ErrorKind::mosaic_failure, "mosaic not closed at " + edge_string(g));
        }
        if (t_atom(A, i, j, b) != lg) {
          throw Error(ErrorKind::mosaic_failure,
                      "label of " + edge_string(with(g, i, g[j])) + " is not t^" + std::to_string(i) +
                          "_" + std::to_string(j) + " of the label of " + edge_string(g) + " in M(" +
                          edge_string(f) + ", " + A.name(a) + ")");
        }
      }
    }
  }
  return M;
}

std::vector<std::pair<Edge, Atom>> merge_into(PreNetwork& into, const PreNetwork& M) {
  if (into.arity() != M.arity()) throw Error(ErrorKind::arity_mismatch, "merging networks of different arity");
  for (const auto& [e, a] : M.edges()) {
    if (auto old = into.label(e); old && *old != a) {
      throw Error(ErrorKind::merge_conflict, "edge " + edge_string(e) + " labeled " +
                                                 std::to_string(*old) + " and " + std::to_string(a));
    }
  }
  std::vector<std::pair<Edge, Atom>> added;
  for (NodeId u : M.nodes()) into.add_node(u);
  for (const auto& [e, a] : M.edges()) {
    if (into.add_edge(e, a)) added.emplace_back(e, a);
  }
  return added;
}

PreNetwork merge(const PreNetwork& N, const PreNetwork& M) {
  PreNetwork out = N;
  merge_into(out, M);
  return out;
}

}  // namespace cylrep
