#include "cylrep/io.hpp"

#include <fstream>
#include <sstream>

namespace cylrep {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::format, where + ": " + what);
}

const Json& field(const Json& j, const char* name, const std::string& where = "") {
  if (!j.is_object()) bad(where.empty() ? "document" : where, "expected an object");
  auto it = j.find(name);
  if (it == j.end()) bad(where + name, "missing");
  return *it;
}

template <class T>
T as(const Json& j, const std::string& where) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception& e) {
    bad(where, std::string("wrong type (") + j.type_name() + ")");
  }
}

std::size_t count(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) bad(where, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

std::vector<NodeId> id_list(const Json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array");
  std::vector<NodeId> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    out.push_back(static_cast<NodeId>(count(j[k], where + "[" + std::to_string(k) + "]")));
  }
  return out;
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::format, path.string() + ": cannot open");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::format, path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::format, path.string() + ": cannot write");
  out << j.dump(2) << '\n';
}

AtomStructure algebra_from_json(const Json& j) {
  const std::size_t n = count(field(j, "n"), "n");
  const Json& atoms = field(j, "atoms");
  if (!atoms.is_array()) bad("atoms", "expected an array of names");
  std::vector<std::string> names;
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    names.push_back(as<std::string>(atoms[k], "atoms[" + std::to_string(k) + "]"));
  }

  const Json& cj = field(j, "cyl");
  if (!cj.is_array()) bad("cyl", "expected an array");
  std::vector<std::vector<std::vector<Atom>>> cyl;
  for (std::size_t i = 0; i < cj.size(); ++i) {
    const std::string wi = "cyl[" + std::to_string(i) + "]";
    if (!cj[i].is_array()) bad(wi, "expected an array");
    auto& block = cyl.emplace_back();
    for (std::size_t a = 0; a < cj[i].size(); ++a) {
      block.push_back(id_list(cj[i][a], wi + "[" + std::to_string(a) + "]"));
    }
  }

  const Json& dj = field(j, "diag");
  if (!dj.is_object()) bad("diag", "expected an object keyed \"i,j\"");
  std::vector<std::vector<std::vector<Atom>>> diag(n, std::vector<std::vector<Atom>>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const std::string key = std::to_string(i) + "," + std::to_string(k);
      auto it = dj.find(key);
      if (it == dj.end()) bad("diag[" + key + "]", "missing");
      diag[i][k] = id_list(*it, "diag[" + key + "]");
    }
  }
  for (const auto& [key, value] : dj.items()) {
    std::size_t i = 0, k = 0;
    char comma = 0;
    std::istringstream ss(key);
    if (!(ss >> i >> comma >> k) || comma != ',' || !ss.eof() || i >= n || k >= n) {
      bad("diag[" + key + "]", "not an index pair below n");
    }
  }

  AtomStructure A = AtomStructure::from_lists(n, names.size(), cyl, diag);
  A.set_names(std::move(names));
  return A;
}

Json to_json(const AtomStructure& A) {
  Json cyl = Json::array();
  for (Index i = 0; i < A.dimension(); ++i) {
    Json block = Json::array();
    for (Atom a = 0; a < A.atom_count(); ++a) block.push_back(A.cyl_image(i, a).members());
    cyl.push_back(std::move(block));
  }
  Json diag = Json::object();
  for (Index i = 0; i < A.dimension(); ++i) {
    for (Index k = 0; k < A.dimension(); ++k) {
      diag[std::to_string(i) + "," + std::to_string(k)] = A.diagonal(i, k).members();
    }
  }
  return Json{{"n", A.dimension()}, {"atoms", A.names()}, {"cyl", cyl}, {"diag", diag}};
}

ConcreteUnit unit_from_json(const Json& j) {
  ConcreteUnit u;
  u.n = count(field(j, "n"), "n");
  if (u.n == 0) bad("n", "must be positive");
  const Json& base = field(j, "base");
  if (!base.is_array()) bad("base", "expected an array of names");
  for (std::size_t k = 0; k < base.size(); ++k) {
    const Json& b = base[k];
    u.base.push_back(b.is_number_integer() ? std::to_string(b.get<long long>())
                                           : as<std::string>(b, "base[" + std::to_string(k) + "]"));
  }
  const Json& seqs = field(j, "sequences");
  if (!seqs.is_array()) bad("sequences", "expected an array");
  if (seqs.empty()) bad("sequences", "unit is empty");
  for (std::size_t k = 0; k < seqs.size(); ++k) {
    const std::string w = "sequences[" + std::to_string(k) + "]";
    auto ids = id_list(seqs[k], w);
    if (ids.size() != u.n) bad(w, "expected " + std::to_string(u.n) + " entries");
    for (NodeId x : ids) {
      if (x >= u.base.size()) bad(w, "entry " + std::to_string(x) + " outside the base");
    }
    u.sequences.emplace_back(ids.begin(), ids.end());
  }
  return u;
}

Json to_json(const ConcreteUnit& u) {
  return Json{{"n", u.n}, {"base", u.base}, {"sequences", u.sequences}};
}

Representation representation_from_json(const Json& j) {
  Representation rep;
  rep.n = count(field(j, "n"), "n");
  rep.base = id_list(field(j, "base"), "base");
  const Json& unit = field(j, "unit");
  if (!unit.is_array()) bad("unit", "expected an array");
  for (std::size_t k = 0; k < unit.size(); ++k) {
    const std::string w = "unit[" + std::to_string(k) + "]";
    rep.unit.push_back(id_list(unit[k], w));
    if (rep.unit.back().size() != rep.n) bad(w, "expected " + std::to_string(rep.n) + " entries");
  }
  rep.labels = id_list(field(j, "labels"), "labels");
  if (rep.labels.size() != rep.unit.size()) bad("labels", "expected one label per unit entry");
  const std::string status = as<std::string>(field(j, "status"), "status");
  if (status == "saturated") rep.status = PlayStatus::saturated;
  else if (status == "bounded") rep.status = PlayStatus::bounded;
  else bad("status", "expected \"saturated\" or \"bounded\"");
  return rep;
}

Json to_json(const Representation& rep) {
  return Json{{"n", rep.n}, {"base", rep.base}, {"unit", rep.unit}, {"labels", rep.labels},
              {"status", to_string(rep.status)}};
}

PreNetwork network_from_json(const Json& j) {
  const auto nodes = id_list(field(j, "nodes"), "nodes");
  const Json& edges = field(j, "edges");
  if (!edges.is_array()) bad("edges", "expected an array");
  Index n = edges.empty() ? 0 : field(edges[0], "tuple", "edges[0].").size();
  if (j.contains("n")) n = count(j["n"], "n");
  PreNetwork N(n);
  for (NodeId u : nodes) N.add_node(u);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const std::string w = "edges[" + std::to_string(k) + "].";
    auto t = id_list(field(edges[k], "tuple", w), w + "tuple");
    if (t.size() != n) bad(w + "tuple", "expected " + std::to_string(n) + " entries");
    const Atom a = static_cast<Atom>(count(field(edges[k], "atom", w), w + "atom"));
    try {
      N.add_edge(t, a);
    } catch (const Error& e) {
      bad(w + "tuple", e.what());
    }
  }
  return N;
}

Json to_json(const PreNetwork& N) {
  Json edges = Json::array();
  for (const auto& [e, a] : N.edges()) edges.push_back(Json{{"tuple", e}, {"atom", a}});
  return Json{{"n", N.arity()}, {"nodes", std::vector<NodeId>(N.nodes().begin(), N.nodes().end())},
              {"edges", edges}};
}

Json to_json(const AtomStructure& A, const Element& x) {
  Json out = Json::array();
  x.for_each([&](std::size_t a) { out.push_back(A.name(static_cast<Atom>(a))); });
  return out;
}

Json to_json(const AtomStructure& A, const ValidationReport& report) {
  Json structure = Json::array();
  for (const auto& v : report.structure) {
    structure.push_back(Json{{"invariant", v.invariant}, {"detail", v.detail}});
  }
  Json axioms = Json::array();
  for (const auto& v : report.axioms) {
    Json examples = Json::array();
    for (const auto& f : v.examples) {
      Json env = Json::object();
      for (const auto& [name, value] : f.counterexample) env[name] = to_json(A, value);
      examples.push_back(Json{{"label", f.label}, {"counterexample", env}, {"excess", to_json(A, f.excess)}});
    }
    axioms.push_back(Json{{"axiom", v.axiom},
                          {"instances", v.instances},
                          {"failures", v.failures},
                          {"pass", v.pass()},
                          {"examples", examples}});
  }
  Json out{{"class", std::string(to_string(report.klass))},
           {"pass", report.pass()},
           {"structure", structure},
           {"axioms", axioms}};
  if (report.oracle_used) out["oracle_disagreements"] = report.oracle_disagreements;
  return out;
}

Json to_json(const EmbeddingReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json entry{{"name", c.name}, {"pass", c.pass}};
    if (!c.detail.empty()) entry["detail"] = c.detail;
    checks.push_back(std::move(entry));
  }
  return Json{{"pass", report.pass()}, {"saturated", report.saturated}, {"checks", checks}};
}

Json to_json(const AtomStructure& A, const RoundRecord& rec, bool trace) {
  Json out{{"round", rec.round},
           {"obligation", to_string(A, rec.obligation)},
           {"nodes_added", rec.nodes_added},
           {"edges_added", rec.edges_added.size()}};
  if (trace) {
    Json edges = Json::array();
    for (const auto& [e, a] : rec.edges_added) edges.push_back(Json{{"tuple", e}, {"atom", A.name(a)}});
    out["edges"] = edges;
  }
  return out;
}

}  // namespace cylrep
