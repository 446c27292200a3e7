#include "cylrep/transform.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace cylrep {

namespace {

void require_arity(Index n) {
  if (n < 2) {
    throw Error(ErrorKind::invalid_argument, "arity must be at least 2, got " + std::to_string(n));
  }
}

}  // namespace

Transformation::Transformation(std::vector<Index> images) : images_(std::move(images)) {
  if (images_.empty()) throw Error(ErrorKind::invalid_argument, "empty transformation");
  for (Index x : images_) {
    if (x >= images_.size()) {
      throw Error(ErrorKind::index_out_of_range,
                  "image " + std::to_string(x) + " outside arity " + std::to_string(images_.size()));
    }
  }
}

Transformation Transformation::identity(Index n) {
  std::vector<Index> im(n);
  for (Index x = 0; x < n; ++x) im[x] = x;
  return Transformation(std::move(im));
}

Transformation Transformation::replacement(Index n, Index i, Index j) {
  if (i >= n || j >= n) throw Error(ErrorKind::index_out_of_range, "replacement index out of range");
  auto t = identity(n);
  t.images_[i] = j;
  return t;
}

Transformation Transformation::transposition(Index n, Index i, Index j) {
  if (i >= n || j >= n) throw Error(ErrorKind::index_out_of_range, "transposition index out of range");
  auto t = identity(n);
  t.images_[i] = j;
  t.images_[j] = i;
  return t;
}

std::string Transformation::to_string() const {
  std::string s = "<";
  for (Index x = 0; x < images_.size(); ++x) {
    if (x) s += ',';
    s += std::to_string(images_[x]);
  }
  return s + ">";
}

Transformation compose(const Transformation& sigma, const Transformation& tau) {
  if (sigma.arity() != tau.arity()) {
    throw Error(ErrorKind::arity_mismatch, "composing transformations of arity " +
                                               std::to_string(sigma.arity()) + " and " +
                                               std::to_string(tau.arity()));
  }
  std::vector<Index> im(tau.arity());
  for (Index x = 0; x < im.size(); ++x) im[x] = sigma(tau(x));
  return Transformation(std::move(im));
}

bool is_permutation(const Transformation& tau) {
  std::vector<bool> hit(tau.arity(), false);
  for (Index y : tau.images()) hit[y] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

std::vector<Replacement> decompose_replacements(const Transformation& tau) {
  if (is_permutation(tau)) {
    throw Error(ErrorKind::not_omega, "cannot decompose permutation " + tau.to_string() +
                                          " into replacements");
  }
  const Index n = tau.arity();
  std::vector<bool> in_range(n, false);
  for (Index y : tau.images()) in_range[y] = true;
  const Index spare = static_cast<Index>(std::find(in_range.begin(), in_range.end(), false) -
                                         in_range.begin());

  // cur[r] is the original value currently held by register r.
  std::vector<Index> cur(n);
  for (Index r = 0; r < n; ++r) cur[r] = r;
  std::vector<bool> done(n);
  for (Index r = 0; r < n; ++r) done[r] = tau(r) == r;
  std::vector<Replacement> word;
  auto copy = [&](Index target, Index source) {
    word.push_back({target, source});
    cur[target] = cur[source];
  };

  // Cycles of tau that no outside register reads from have no duplicate to
  // read from; park one value in the spare register.
  std::vector<Index> readers(n, 0);
  for (Index r = 0; r < n; ++r) {
    if (tau(r) != r) ++readers[tau(r)];
  }
  std::vector<bool> seen(n, false);
  for (Index start = 0; start < n; ++start) {
    if (done[start] || seen[start] || !in_range[start]) continue;
    std::vector<Index> cycle;
    Index r = start;
    while (!seen[r] && in_range[r] && !done[r]) {
      seen[r] = true;
      cycle.push_back(r);
      r = tau(r);
    }
    if (r != start || cycle.size() < 2) continue;
    const bool closed = std::all_of(cycle.begin(), cycle.end(), [&](Index c) { return readers[c] == 1; });
    if (!closed) continue;
    copy(spare, cycle.front());
    for (std::size_t k = 0; k + 1 < cycle.size(); ++k) {
      copy(cycle[k], cycle[k + 1]);
      done[cycle[k]] = true;
    }
    copy(cycle.back(), spare);
    done[cycle.back()] = true;
  }

  // Remaining registers: repeatedly overwrite the least register whose
  // current value is either unneeded or held elsewhere.
  auto holder = [&](Index value, Index except) -> std::optional<Index> {
    for (Index r = 0; r < n; ++r) {
      if (r != except && cur[r] == value) return r;
    }
    return std::nullopt;
  };
  auto needed = [&](Index value, Index except) {
    for (Index r = 0; r < n; ++r) {
      if (r != except && !done[r] && tau(r) == value) return true;
    }
    return false;
  };
  for (;;) {
    bool progressed = false;
    bool remaining = false;
    for (Index r = 0; r < n; ++r) {
      if (done[r]) continue;
      remaining = true;
      if (cur[r] == tau(r)) {
        done[r] = true;
        progressed = true;
        break;
      }
      if (needed(cur[r], r) && !holder(cur[r], r)) continue;
      auto src = holder(tau(r), r);
      if (!src) continue;
      copy(r, *src);
      done[r] = true;
      progressed = true;
      break;
    }
    if (!remaining) break;
    if (!progressed) {
      throw Error(ErrorKind::invalid_argument,
                  "replacement decomposition stalled on " + tau.to_string());
    }
  }
  return word;
}

Transformation recompose(Index n, std::span<const Replacement> word) {
  auto t = Transformation::identity(n);
  for (const auto& r : word) t = compose(t, Transformation::replacement(n, r.target, r.source));
  return t;
}

std::vector<Transformation> enumerate(Index n, TransformFamily family) {
  require_arity(n);
  std::vector<Transformation> out;
  std::vector<Index> im(n, 0);
  for (;;) {
    Transformation t(im);
    const bool perm = is_permutation(t);
    if (family == TransformFamily::all || (family == TransformFamily::omega && !perm) ||
        (family == TransformFamily::permutations && perm)) {
      out.push_back(std::move(t));
    }
    Index pos = n;
    while (pos > 0) {
      --pos;
      if (++im[pos] < n) break;
      im[pos] = 0;
      if (pos == 0) return out;
    }
  }
}

PermutationChain permutation_chain(Index n) {
  require_arity(n);
  PermutationChain chain;
  chain.arity = n;
  std::map<Transformation, std::size_t> index;
  chain.entries.push_back({Transformation::identity(n), std::nullopt, std::nullopt});
  index.emplace(chain.entries.front().permutation, 0);
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t parent = queue.front();
    queue.pop_front();
    for (Index k = 0; k < n; ++k) {
      for (Index l = k + 1; l < n; ++l) {
        auto next = compose(chain.entries[parent].permutation, Transformation::transposition(n, k, l));
        if (index.contains(next)) continue;
        index.emplace(next, chain.entries.size());
        queue.push_back(chain.entries.size());
        chain.entries.push_back({std::move(next), parent, std::pair{k, l}});
      }
    }
  }
  return chain;
}

}  // namespace cylrep
