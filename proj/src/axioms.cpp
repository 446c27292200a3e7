#include "cylrep/axioms.hpp"

#include <algorithm>
#include <functional>

namespace cylrep {

namespace {

constexpr std::size_t kMaxExamples = 5;

std::string idx(std::initializer_list<std::pair<const char*, Index>> parts) {
  std::string s = "[";
  bool first = true;
  for (auto [k, v] : parts) {
    if (!first) s += ' ';
    first = false;
    s += k;
    s += '=';
    s += std::to_string(v);
  }
  return s + "]";
}

// Runs f over every assignment drawn from `choices` for each variable; stops
// at the first counterexample.
CheckResult search(const AtomStructure& A, const Inequality& ineq,
                   const std::vector<Element>& choices) {
  const auto vars_set = ineq.lhs.variables();
  auto rhs_vars = ineq.rhs.variables();
  std::vector<std::string> vars(vars_set.begin(), vars_set.end());
  for (const auto& v : rhs_vars) {
    if (!vars_set.contains(v)) vars.push_back(v);
  }
  Env env;
  CheckResult result;
  std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
    if (k == vars.size()) {
      Element l = ineq.lhs.eval(A, env);
      Element r = ineq.rhs.eval(A, env);
      if (!l.subset_of(r)) {
        result.holds = false;
        result.counterexample = env;
        result.excess = l - r;
        return false;
      }
      return true;
    }
    for (const auto& c : choices) {
      env[vars[k]] = c;
      if (!rec(k + 1)) return false;
    }
    return true;
  };
  rec(0);
  return result;
}

Inequality leq(std::string axiom, std::string label, Term lhs, Term rhs) {
  return Inequality{std::move(axiom), std::move(label), std::move(lhs), std::move(rhs), true};
}

void equation(std::vector<Inequality>& out, const std::string& axiom, const std::string& where,
              const Term& a, const Term& b) {
  out.push_back(leq(axiom, axiom + where + " <=", a, b));
  out.push_back(leq(axiom, axiom + where + " >=", b, a));
}

}  // namespace

CheckResult holds_atomwise(const AtomStructure& A, const Inequality& ineq) {
  if (!ineq.atomwise_valid) {
    throw Error(ErrorKind::invalid_argument, ineq.label + " is not declared atomwise-valid");
  }
  std::vector<Element> atoms;
  atoms.reserve(A.atom_count());
  for (Atom a = 0; a < A.atom_count(); ++a) atoms.push_back(A.single(a));
  return search(A, ineq, atoms);
}

CheckResult holds_exhaustive(const AtomStructure& A, const Inequality& ineq, std::size_t atom_bound) {
  if (A.atom_count() > atom_bound) {
    throw Error(ErrorKind::bound_exceeded, "exhaustive check limited to " + std::to_string(atom_bound) +
                                               " atoms, structure has " +
                                               std::to_string(A.atom_count()));
  }
  std::vector<Element> all;
  const std::size_t total = std::size_t{1} << A.atom_count();
  all.reserve(total);
  for (std::size_t mask = 0; mask < total; ++mask) {
    Element e = A.empty();
    for (std::size_t b = 0; b < A.atom_count(); ++b) {
      if ((mask >> b) & 1u) e.set(b);
    }
    all.push_back(std::move(e));
  }
  return search(A, ineq, all);
}

std::string_view to_string(Ax7Mode mode) {
  return mode == Ax7Mode::skip_t0 ? "skip-t0" : "include-t0";
}

std::optional<Ax7Mode> parse_ax7_mode(std::string_view s) {
  if (s == "skip-t0") return Ax7Mode::skip_t0;
  if (s == "include-t0") return Ax7Mode::include_t0;
  return std::nullopt;
}

Inequality Ax7Instance::compile() const {
  const auto x = Term::var("x");
  Term lhs = x;
  for (std::size_t t = 0; t < length(); ++t) lhs = Term::s(is[t], js[t], Term::c(ks[t], lhs));
  for (Index l : K) lhs = lhs * Term::d(l, tau(l));

  std::string label = "Ax7[m=" + std::to_string(length()) + " i=";
  auto list = [](const std::vector<Index>& v) {
    std::string s;
    for (Index x : v) s += std::to_string(x);
    return s;
  };
  label += list(is) + " j=" + list(js) + " k=" + list(ks) + " target=" + std::to_string(target) + "]";
  return leq("Ax7", std::move(label), std::move(lhs), Term::c(target, x));
}

std::vector<Ax7Instance> ax7_instances(Index n, std::size_t m_max, Ax7Mode mode) {
  std::vector<Ax7Instance> out;
  for (std::size_t m = 1; m <= m_max; ++m) {
    // Odometer over 3m + 1 digits: i_1..i_m, j_1..j_m, k_1..k_m, target.
    std::vector<Index> digits(3 * m + 1, 0);
    for (;;) {
      Ax7Instance inst;
      inst.is.assign(digits.begin(), digits.begin() + m);
      inst.js.assign(digits.begin() + m, digits.begin() + 2 * m);
      inst.ks.assign(digits.begin() + 2 * m, digits.begin() + 3 * m);
      inst.target = digits.back();

      std::vector<bool> in_k(n, false);
      for (std::size_t t = 0; t < m; ++t) in_k[inst.is[t]] = in_k[inst.ks[t]] = true;
      in_k[inst.target] = false;
      for (Index l = 0; l < n; ++l) {
        if (in_k[l]) inst.K.push_back(l);
      }

      // tau_t = [i_t/j_t] o ... o [i_1/j_1]
      auto tau_t = Transformation::identity(n);
      bool ok = true;
      for (std::size_t t = 0; t < m && ok; ++t) {
        if (t > 0 || mode == Ax7Mode::include_t0) {
          for (Index l : inst.K) {
            if (tau_t(l) == inst.ks[t]) {
              ok = false;
              break;
            }
          }
        }
        tau_t = compose(Transformation::replacement(n, inst.is[t], inst.js[t]), tau_t);
      }
      if (ok) {
        inst.tau = tau_t;
        out.push_back(std::move(inst));
      }

      std::size_t pos = digits.size();
      bool carry = true;
      while (carry && pos > 0) {
        --pos;
        if (++digits[pos] < n) {
          carry = false;
        } else {
          digits[pos] = 0;
        }
      }
      if (carry) break;
    }
  }
  return out;
}

Catalog catalog(Klass klass, Index n) {
  if (n < 2) throw Error(ErrorKind::invalid_argument, "dimension must be at least 2");
  Catalog cat;
  cat.klass = klass;
  cat.dimension = n;
  cat.ax7 = has_ax7(klass);
  auto& out = cat.axioms;
  const auto x = Term::var("x");
  const auto y = Term::var("y");
  using T = Term;

  for (Index i = 0; i < n; ++i) equation(out, "Ax1", idx({{"i", i}}), T::c(i, T::zero()), T::zero());
  for (Index i = 0; i < n; ++i) out.push_back(leq("Ax2", "Ax2" + idx({{"i", i}}), x, T::c(i, x)));
  for (Index i = 0; i < n; ++i) {
    equation(out, "Ax3", idx({{"i", i}}), T::c(i, x * T::c(i, y)), T::c(i, x) * T::c(i, y));
  }
  for (Index i = 0; i < n; ++i) equation(out, "Ax4", idx({{"i", i}}), T::d(i, i), T::one());
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      for (Index k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const auto w = idx({{"i", i}, {"j", j}, {"k", k}});
        out.push_back(leq("Ax5", "Ax5" + w + " transitivity", T::d(i, k) * T::d(k, j), T::d(i, j)));
        equation(out, "Ax5", w + " symmetry", T::d(i, j), T::d(j, i));
        equation(out, "Ax5", w + " cylinder", T::d(j, i), T::c(k, T::d(j, i)));
      }
    }
  }
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (i == j) continue;
      out.push_back(leq("Ax6", "Ax6" + idx({{"i", i}, {"j", j}}), T::c(i, x * T::d(i, j)) * T::d(i, j), x));
    }
  }
  if (klass == Klass::rc) return cat;

  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      for (Index k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        out.push_back(leq("Ax8", "Ax8" + idx({{"i", i}, {"j", j}, {"k", k}}),
                          T::c(j, T::c(i, x)) * T::d(j, k), T::c(i, T::c(j, x))));
      }
    }
  }
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      for (Index k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        equation(out, "Ax9", idx({{"i", i}, {"j", j}, {"k", k}}), T::d(i, j),
                 T::c(k, T::d(i, k) * T::d(k, j)));
      }
    }
  }
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      for (Index k = 0; k < n; ++k) {
        for (Index m = 0; m < n; ++m) {
          if (k == i || k == j || k == m || m == i || m == j) continue;
          equation(out, "Ax10", idx({{"i", i}, {"j", j}, {"k", k}, {"m", m}}),
                   T::s(k, i, T::s(i, j, T::s(j, m, T::s(m, k, T::c(k, x))))),
                   T::s(k, m, T::s(m, i, T::s(i, j, T::s(j, k, T::c(k, x))))));
        }
      }
    }
  }
  if (klass == Klass::dc || klass == Klass::dc_minus) return cat;

  if (n == 2) {
    const auto nd = -T::d(0, 1);
    out.push_back(leq("Ax11", "Ax11", x * nd,
                      T::c(0, T::c(1, nd * T::s(0, 1, T::c(1, x)) * T::s(1, 0, T::c(0, x))))));
  } else {
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) {
        Term body = T::s(i, j, T::c(j, x)) * T::s(j, i, T::c(i, x));
        for (Index k = 0; k < n; ++k) {
          if (k == i || k == j) continue;
          body = body * T::s(k, i, T::s(i, j, T::s(j, k, T::c(k, x))));
        }
        out.push_back(leq("Ax12", "Ax12" + idx({{"i", i}, {"j", j}}), x, T::c(i, T::c(j, body))));
      }
    }
  }
  return cat;
}

bool ValidationReport::pass() const {
  if (!structure.empty()) return false;
  return std::all_of(axioms.begin(), axioms.end(), [](const AxiomVerdict& v) { return v.pass(); });
}

const AxiomVerdict* ValidationReport::find(std::string_view axiom) const {
  for (const auto& v : axioms) {
    if (v.axiom == axiom) return &v;
  }
  return nullptr;
}

ValidationReport validate(const AtomStructure& A, Klass klass, const ValidateOptions& opts) {
  ValidationReport report;
  report.klass = klass;
  report.structure = wellformed(A);
  if (A.atom_count() == 0 || A.dimension() < 2) return report;

  const bool oracle = opts.use_oracle && A.atom_count() <= opts.oracle_atom_bound;
  report.oracle_used = oracle;
  auto verdict_for = [&](const std::string& axiom) -> AxiomVerdict& {
    for (auto& v : report.axioms) {
      if (v.axiom == axiom) return v;
    }
    report.axioms.push_back(AxiomVerdict{axiom, 0, 0, {}});
    return report.axioms.back();
  };
  auto check = [&](const Inequality& ineq) {
    auto& v = verdict_for(ineq.axiom);
    ++v.instances;
    CheckResult r = holds_atomwise(A, ineq);
    if (oracle && holds_exhaustive(A, ineq, opts.oracle_atom_bound).holds != r.holds) {
      ++report.oracle_disagreements;
    }
    if (!r.holds) {
      ++v.failures;
      if (v.examples.size() < kMaxExamples) {
        v.examples.push_back({ineq.label, std::move(r.counterexample), std::move(r.excess)});
      }
    }
  };

  const Catalog cat = catalog(klass, A.dimension());
  for (const auto& ineq : cat.axioms) check(ineq);
  if (cat.ax7 && opts.ax7_depth > 0) {
    verdict_for("Ax7");
    for (const auto& inst : ax7_instances(A.dimension(), opts.ax7_depth, opts.ax7_mode)) {
      check(inst.compile());
    }
  }
  return report;
}

}  // namespace cylrep
