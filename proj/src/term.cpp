#include "cylrep/term.hpp"

namespace cylrep {

struct Term::Node {
  Op op;
  std::string name;
  Index i = 0;
  Index j = 0;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

Term Term::var(std::string name) {
  return Term(std::make_shared<const Node>(Node{Op::var, std::move(name), 0, 0, nullptr, nullptr}));
}
Term Term::zero() { return Term(std::make_shared<const Node>(Node{Op::zero, {}, 0, 0, nullptr, nullptr})); }
Term Term::one() { return Term(std::make_shared<const Node>(Node{Op::one, {}, 0, 0, nullptr, nullptr})); }
Term Term::d(Index i, Index j) {
  return Term(std::make_shared<const Node>(Node{Op::diag, {}, i, j, nullptr, nullptr}));
}
Term Term::c(Index i, Term x) {
  return Term(std::make_shared<const Node>(Node{Op::cyl, {}, i, 0, std::move(x.node_), nullptr}));
}
Term Term::s(Index i, Index j, Term x) {
  return Term(std::make_shared<const Node>(Node{Op::subst, {}, i, j, std::move(x.node_), nullptr}));
}
Term Term::t(Index i, Index j, Term x) {
  return Term(std::make_shared<const Node>(Node{Op::t_op, {}, i, j, std::move(x.node_), nullptr}));
}
Term operator+(Term a, Term b) {
  return Term(std::make_shared<const Term::Node>(
      Term::Node{Term::Op::join, {}, 0, 0, std::move(a.node_), std::move(b.node_)}));
}
Term operator*(Term a, Term b) {
  return Term(std::make_shared<const Term::Node>(
      Term::Node{Term::Op::meet, {}, 0, 0, std::move(a.node_), std::move(b.node_)}));
}
Term operator-(Term a) {
  return Term(std::make_shared<const Term::Node>(
      Term::Node{Term::Op::complement, {}, 0, 0, std::move(a.node_), nullptr}));
}

Term::Op Term::op() const { return node_->op; }

namespace {

std::string show(const Term::Node& n) {
  using Op = Term::Op;
  auto ij = [&] { return std::to_string(n.i) + std::to_string(n.j); };
  switch (n.op) {
    case Op::var: return n.name;
    case Op::zero: return "0";
    case Op::one: return "1";
    case Op::diag: return "d" + ij();
    case Op::complement: return "-" + show(*n.lhs);
    case Op::cyl: return "c" + std::to_string(n.i) + " " + show(*n.lhs);
    case Op::subst: return "s" + ij() + " " + show(*n.lhs);
    case Op::t_op: return "t" + ij() + " " + show(*n.lhs);
    case Op::join: return "(" + show(*n.lhs) + " + " + show(*n.rhs) + ")";
    case Op::meet: return "(" + show(*n.lhs) + " . " + show(*n.rhs) + ")";
  }
  return "?";
}

void collect(const Term::Node& n, std::set<std::string>& out) {
  if (n.op == Term::Op::var) out.insert(n.name);
  if (n.lhs) collect(*n.lhs, out);
  if (n.rhs) collect(*n.rhs, out);
}

Element evaluate(const Term::Node& n, const AtomStructure& A, const Env& env) {
  using Op = Term::Op;
  switch (n.op) {
    case Op::var: {
      auto it = env.find(n.name);
      if (it == env.end()) throw Error(ErrorKind::invalid_argument, "unbound variable " + n.name);
      return it->second;
    }
    case Op::zero: return A.empty();
    case Op::one: return A.full();
    case Op::diag: return A.diagonal(n.i, n.j);
    case Op::complement: return ~evaluate(*n.lhs, A, env);
    case Op::cyl: return cyl(A, n.i, evaluate(*n.lhs, A, env));
    case Op::subst: return s_subst(A, n.i, n.j, evaluate(*n.lhs, A, env));
    case Op::t_op: {
      A.check_index(n.i);
      A.check_index(n.j);
      Element x = evaluate(*n.lhs, A, env);
      if (n.i == n.j) return x;
      return cyl(A, n.i, x) & A.diagonal(n.i, n.j);
    }
    case Op::join: return evaluate(*n.lhs, A, env) | evaluate(*n.rhs, A, env);
    case Op::meet: return evaluate(*n.lhs, A, env) & evaluate(*n.rhs, A, env);
  }
  throw Error(ErrorKind::invalid_argument, "unknown term operator");
}

}  // namespace

std::string Term::to_string() const { return show(*node_); }

std::set<std::string> Term::variables() const {
  std::set<std::string> out;
  collect(*node_, out);
  return out;
}

Element Term::eval(const AtomStructure& A, const Env& env) const { return evaluate(*node_, A, env); }

}  // namespace cylrep
