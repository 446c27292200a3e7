#include "cylrep/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "cylrep/io.hpp"

namespace cylrep {

namespace {

enum class LogLevel { off, info, trace };

LogLevel log_level() {
  const char* v = std::getenv("CYLREP_LOG");
  if (!v) return LogLevel::off;
  const std::string s = v;
  if (s == "info") return LogLevel::info;
  if (s == "trace") return LogLevel::trace;
  return LogLevel::off;
}

struct Config {
  std::string input;
  std::string second;
  std::string output;
  std::string klass = "sc";
  std::optional<std::string> expect;
  std::string kind = "diagonalizable";
  std::size_t ax7_depth = 3;
  std::string ax7_mode = "include-t0";
  std::size_t max_rounds = 10000;
  std::size_t max_nodes = 5000;
  bool debug_check_networks = false;
  bool oracle = false;
  std::size_t oracle_atom_bound = 6;
  bool json = false;
  bool no_validate = false;
  bool allow_bounded = false;
};

void emit(const Config& cfg, std::ostream& out, const Json& j) {
  if (!cfg.output.empty()) write_json_file(cfg.output, j);
  else out << j.dump(2) << '\n';
}

ValidateOptions validate_options(const Config& cfg) {
  ValidateOptions o;
  o.ax7_depth = cfg.ax7_depth;
  o.ax7_mode = *parse_ax7_mode(cfg.ax7_mode);
  o.use_oracle = cfg.oracle;
  o.oracle_atom_bound = cfg.oracle_atom_bound;
  return o;
}

void print_report(const ValidationReport& r, std::ostream& out) {
  out << "class " << to_string(r.klass) << ": " << (r.pass() ? "pass" : "FAIL") << '\n';
  for (const auto& v : r.structure) out << "  structure " << v.invariant << ": " << v.detail << '\n';
  for (const auto& v : r.axioms) {
    out << "  " << v.axiom << ": " << v.instances << " instances, " << v.failures << " failures\n";
    for (const auto& f : v.examples) out << "    " << f.label << '\n';
  }
  if (r.oracle_used) out << "  oracle disagreements: " << r.oracle_disagreements << '\n';
}

void print_embedding(const EmbeddingReport& r, std::ostream& out) {
  out << "embedding: " << (r.pass() ? "pass" : "FAIL") << (r.saturated ? "" : " (bounded)") << '\n';
  for (const auto& c : r.checks) {
    out << "  " << c.name << ": " << (c.pass ? "pass" : "FAIL");
    if (!c.detail.empty()) out << " (" << c.detail << ")";
    out << '\n';
  }
}

int run_check(const Config& cfg, std::ostream& out) {
  const AtomStructure A = algebra_from_json(read_json_file(cfg.input));
  const ValidationReport r = validate(A, *parse_klass(cfg.klass), validate_options(cfg));
  if (cfg.json) emit(cfg, out, to_json(A, r));
  else print_report(r, out);
  return r.pass() ? 0 : 1;
}

int run_represent(const Config& cfg, std::ostream& out, std::ostream& err) {
  const AtomStructure A = algebra_from_json(read_json_file(cfg.input));
  const Klass klass = *parse_klass(cfg.klass);
  if (!cfg.no_validate) {
    const ValidationReport r = validate(A, klass, validate_options(cfg));
    if (!r.pass()) {
      print_report(r, err);
      err << "refusing to represent an algebra that fails validation (use --no-validate to override)\n";
      return 1;
    }
  }
  PlayOptions opts;
  opts.limits = {cfg.max_rounds, cfg.max_nodes};
  opts.debug_check_networks = cfg.debug_check_networks;
  const LogLevel level = log_level();
  if (level != LogLevel::off) {
    opts.on_round = [&](const RoundRecord& rec) {
      err << to_json(A, rec, level == LogLevel::trace).dump() << '\n';
    };
  }
  Representation rep;
  try {
    rep = build_representation(A, klass, opts);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::format) throw;
    err << "game failed: " << e.what() << '\n';
    return 1;
  }
  const Json j = to_json(rep);
  if (!cfg.output.empty()) write_json_file(cfg.output, j);
  if (cfg.json || cfg.output.empty()) {
    if (cfg.output.empty()) out << j.dump(2) << '\n';
    else out << Json{{"status", to_string(rep.status)}, {"base", rep.base.size()}, {"unit", rep.unit.size()}}.dump(2) << '\n';
  } else {
    out << to_string(rep.status) << ": " << rep.base.size() << " nodes, " << rep.unit.size() << " edges\n";
  }
  return rep.status == PlayStatus::saturated || cfg.allow_bounded ? 0 : 1;
}

int run_verify(const Config& cfg, std::ostream& out) {
  const AtomStructure A = algebra_from_json(read_json_file(cfg.input));
  const Representation rep = representation_from_json(read_json_file(cfg.second));
  const EmbeddingReport r = verify_embedding(A, rep);
  if (cfg.json) emit(cfg, out, to_json(r));
  else print_embedding(r, out);
  return r.pass() ? 0 : 1;
}

int run_import(const Config& cfg, std::ostream& out, std::ostream& err) {
  const ConcreteUnit u = unit_from_json(read_json_file(cfg.input));
  std::optional<Klass> expect;
  if (cfg.expect) expect = parse_klass(*cfg.expect);
  try {
    emit(cfg, out, to_json(import_unit(u, expect)));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::closure_violation) throw;
    err << e.what() << '\n';
    return 1;
  }
  return 0;
}

int run_close(const Config& cfg, std::ostream& out) {
  const ConcreteUnit u = unit_from_json(read_json_file(cfg.input));
  const UnitClosure kind = cfg.kind == "permutable" ? UnitClosure::permutable : UnitClosure::diagonalizable;
  emit(cfg, out, to_json(close_unit(u, kind)));
  return 0;
}

int run_oracle(const Config& cfg, std::ostream& out) {
  const AtomStructure A = algebra_from_json(read_json_file(cfg.input));
  if (A.atom_count() > cfg.oracle_atom_bound) {
    throw Error(ErrorKind::bound_exceeded, std::to_string(A.atom_count()) +
                                               " atoms exceed the oracle bound of " +
                                               std::to_string(cfg.oracle_atom_bound));
  }
  const Catalog cat = catalog(*parse_klass(cfg.klass), A.dimension());
  std::vector<Inequality> all = cat.axioms;
  if (cat.ax7) {
    for (const auto& inst : ax7_instances(A.dimension(), cfg.ax7_depth, *parse_ax7_mode(cfg.ax7_mode))) {
      all.push_back(inst.compile());
    }
  }
  std::size_t disagreements = 0;
  Json cases = Json::array();
  for (const auto& ineq : all) {
    const bool fast = holds_atomwise(A, ineq).holds;
    const bool slow = holds_exhaustive(A, ineq, cfg.oracle_atom_bound).holds;
    if (fast != slow) {
      ++disagreements;
      cases.push_back(Json{{"label", ineq.label}, {"atomwise", fast}, {"exhaustive", slow}});
    }
  }
  if (cfg.json) {
    emit(cfg, out, Json{{"checked", all.size()}, {"disagreements", disagreements}, {"cases", cases}});
  } else {
    out << all.size() << " inequalities checked, " << disagreements << " disagreements\n";
    for (const auto& c : cases) out << "  " << c["label"].get<std::string>() << '\n';
  }
  return disagreements == 0 ? 0 : 1;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Atom structures of cylindric-type algebras: validation and representation"};
  app.name("cylrep");
  app.require_subcommand(1);
  Config cfg;
  const std::vector<std::string> classes{"rc", "dc", "sc", "dc-minus", "sc-minus"};

  auto add_class = [&](CLI::App* sub) {
    sub->add_option("--class", cfg.klass, "rc, dc, sc, dc-minus or sc-minus")
        ->check(CLI::IsMember(classes))
        ->capture_default_str();
  };
  auto add_axioms = [&](CLI::App* sub) {
    sub->add_option("--ax7-depth", cfg.ax7_depth, "longest (Ax7) instance checked")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    sub->add_option("--ax7-mode", cfg.ax7_mode, "side-condition reading: skip-t0 or include-t0")
        ->check(CLI::IsMember({"skip-t0", "include-t0"}))
        ->capture_default_str();
    sub->add_option("--oracle-atom-bound", cfg.oracle_atom_bound, "largest atom count for exhaustive checks")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("-o,--output", cfg.output, "write the JSON result here");
    sub->add_flag("--json", cfg.json, "emit reports as JSON");
  };

  auto* check = app.add_subcommand("check", "validate an algebra against its axioms");
  check->add_option("algebra", cfg.input)->required();
  add_class(check);
  add_axioms(check);
  add_output(check);
  check->add_flag("--oracle", cfg.oracle, "cross-check with exhaustive evaluation");

  auto* represent = app.add_subcommand("represent", "build a representation by playing the game");
  represent->add_option("algebra", cfg.input)->required();
  add_class(represent);
  add_axioms(represent);
  add_output(represent);
  represent->add_option("--max-rounds", cfg.max_rounds)->check(CLI::NonNegativeNumber)->capture_default_str();
  represent->add_option("--max-nodes", cfg.max_nodes)->check(CLI::NonNegativeNumber)->capture_default_str();
  represent->add_flag("--debug-check-networks", cfg.debug_check_networks,
                      "check the network condition after every move");
  represent->add_flag("--no-validate", cfg.no_validate, "skip validation before playing");
  represent->add_flag("--allow-bounded", cfg.allow_bounded, "exit 0 on a bounded play");

  auto* verify = app.add_subcommand("verify", "verify a representation of an algebra");
  verify->add_option("algebra", cfg.input)->required();
  verify->add_option("representation", cfg.second)->required();
  add_output(verify);

  auto* import = app.add_subcommand("import-unit", "build the full set algebra of a unit");
  import->add_option("unit", cfg.input)->required();
  import->add_option("--class", cfg.expect, "require the unit to be closed for this class")
      ->check(CLI::IsMember(classes));
  add_output(import);

  auto* close = app.add_subcommand("close-unit", "close a unit under replacements or all transformations");
  close->add_option("unit", cfg.input)->required();
  close->add_option("--kind", cfg.kind)
      ->check(CLI::IsMember({"diagonalizable", "permutable"}))
      ->capture_default_str();
  add_output(close);

  auto* oracle = app.add_subcommand("oracle", "compare atomwise and exhaustive axiom checking");
  oracle->add_option("algebra", cfg.input)->required();
  add_class(oracle);
  add_axioms(oracle);
  add_output(oracle);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  try {
    if (check->parsed()) return run_check(cfg, out);
    if (represent->parsed()) return run_represent(cfg, out, err);
    if (verify->parsed()) return run_verify(cfg, out);
    if (import->parsed()) return run_import(cfg, out, err);
    if (close->parsed()) return run_close(cfg, out);
    if (oracle->parsed()) return run_oracle(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::format || e.kind() == ErrorKind::bound_exceeded ? 2 : 1;
  }
  return 2;
}

}  // namespace cylrep
