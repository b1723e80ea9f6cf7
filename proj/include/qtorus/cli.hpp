// Copyright 2026 The qtorus Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Every subcommand writes one JSON document to
// stdout (or --out) and exits 0; validation failures exit 2 and numerical
// failures exit 1, both with {"error": {...}} on stderr.

#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qtorus/compiler.hpp"
#include "qtorus/errors.hpp"
#include "qtorus/generators.hpp"
#include "qtorus/lieclosure.hpp"
#include "qtorus/linalg.hpp"
#include "qtorus/random.hpp"
#include "qtorus/serialize.hpp"
#include "qtorus/symalg.hpp"

namespace qtorus::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNumerical = 1;
inline constexpr int kExitValidation = 2;

/// Defaults for every tunable; each has a flag of the same name.
struct Defaults {
  static constexpr int n = 1;
  static constexpr int l = 2;
  static constexpr double closure_tol = 1e-8;
  static constexpr double membership_tol = 1e-8;
  static constexpr double unitary_tol = 1e-9;
  static constexpr std::size_t max_dim = kDefaultMaxDim;
  static constexpr int slices = 1;
  static constexpr int sweep_max = 64;
  static constexpr int max_slices = 1024;
  static constexpr int max_depth = 8;
  static constexpr int trotter_order = 2;
  static constexpr int table_max_n = 3;
  static constexpr unsigned long long seed = 1;
};

struct RunConfig {
  std::string subcommand;
  std::string family;
  int n = Defaults::n;
  int l = Defaults::l;
  int variant = 3;
  bool matrices = false;
  bool adjoin_phase = false;
  double closure_tol = Defaults::closure_tol;
  double membership_tol = Defaults::membership_tol;
  double unitary_tol = Defaults::unitary_tol;
  std::size_t max_dim = Defaults::max_dim;
  std::string out_path;
  unsigned long long seed = Defaults::seed;

  // compile
  std::string target_path;
  std::string target_kind = "random";
  int slices = Defaults::slices;
  int sweep_max = 0;  // 0: single compile; otherwise sweep M = slices..sweep_max
  std::optional<double> target_error;
  int max_slices = Defaults::max_slices;
  int max_depth = Defaults::max_depth;
  double tau_clip = std::numbers::pi;
  int trotter_order = Defaults::trotter_order;
  std::string synthesis = "auto";
  bool merge = false;
  bool items = true;

  // verify
  bool self = false;
  std::string sequence_path;

  // table
  int table_max_n = Defaults::table_max_n;
  bool timing = false;

  // mono
  std::string expr;
  std::string times;
  int power = 1;
  bool invert = false;
};

namespace detail {

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) qtorus::detail::fail(ErrorCode::invalid_argument, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    qtorus::detail::fail(ErrorCode::invalid_argument,
                         "'" + path + "' is not valid JSON: " + e.what());
  }
}

inline Family parse_family(const std::string& name) {
  const auto f = family_from_string(name);
  if (!f || *f == Family::custom) {
    qtorus::detail::fail(ErrorCode::invalid_argument, "unknown family '" + name + "'");
  }
  return *f;
}

inline GeneratorSet build_family(const RunConfig& c) {
  FamilyRequest req;
  req.family = parse_family(c.family);
  req.n = c.n;
  req.l = c.l;
  req.variant = c.variant == 4 ? GammaVariant::four : GammaVariant::three;
  return make_family(req, c.max_dim);
}

inline ClosureOptions closure_options(const RunConfig& c) {
  ClosureOptions o;
  o.tol = c.closure_tol;
  o.adjoin_center = c.adjoin_phase;
  o.max_dim = c.max_dim;
  return o;
}

inline CompileConfig compile_config(const RunConfig& c) {
  CompileConfig cfg;
  cfg.slices = c.slices;
  cfg.max_commutator_depth = c.max_depth;
  cfg.target_error = c.target_error;
  cfg.tau_clip = c.tau_clip;
  cfg.trotter_order = c.trotter_order;
  cfg.synthesis = c.synthesis == "group" ? CommutatorSynthesis::group_commutator
                                         : CommutatorSynthesis::automatic;
  cfg.merge_adjacent = c.merge;
  cfg.max_slices = c.max_slices;
  cfg.membership_tol = c.membership_tol;
  cfg.unitary_tol = c.unitary_tol;
  return cfg;
}

inline ComplexMatrix cnot() {
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1.0;
  return m;
}

inline ComplexMatrix load_target(const RunConfig& c, std::size_t dim) {
  if (!c.target_path.empty()) {
    const Json j = read_json_file(c.target_path);
    return matrix_from_json(j.is_object() ? j.at("matrix") : j);
  }
  if (c.target_kind == "identity") return identity(dim);
  if (c.target_kind == "cnot") {
    if (dim != 4) {
      qtorus::detail::fail(ErrorCode::dimension_mismatch, "cnot target needs dimension 4");
    }
    return cnot();
  }
  Rng rng(c.seed);
  return random_special_unitary(dim, rng);
}

inline Json run_gens(const RunConfig& c) { return to_json(build_family(c), c.matrices); }

inline Json run_relations(const RunConfig& c) { return to_json(relation_report(build_family(c))); }

inline Json run_closure(const RunConfig& c) {
  const GeneratorSet gens = anti_hermitian_generators(build_family(c));
  Json out = to_json(closure(gens, closure_options(c)));
  out["family"] = std::string(to_string(gens.family));
  out["n"] = gens.n;
  out["l"] = gens.l;
  out["adjoin_phase"] = c.adjoin_phase;
  out["generators"] = gens.elements.size();
  return out;
}

inline Json run_span(const RunConfig& c) {
  const int rank = span_dimension(c.l, c.n, c.max_dim);
  const long long predicted = qtorus::detail::ipow(c.l, 2 * c.n);
  return {{"l", c.l}, {"n", c.n}, {"rank", rank}, {"predicted", predicted},
          {"pass", rank == predicted}};
}

inline Json run_compile(const RunConfig& c) {
  const GeneratorSet gens = build_family(c);
  ClosureOptions co = closure_options(c);
  const LieBasis basis = closure(gens, co);
  const ComplexMatrix u = load_target(c, gens.dim());
  const CompileConfig cfg = compile_config(c);
  Json target = {{"kind", c.target_path.empty() ? c.target_kind : "file"}, {"dim", dim_of(u)}};
  if (c.target_path.empty() && c.target_kind == "random") target["seed"] = c.seed;
  if (c.sweep_max > 0) {
    const ConvergenceTable table =
        compile_report(u, gens, basis, cfg, doubling_sweep(c.slices, c.sweep_max));
    return {{"gens", std::string(to_string(gens.family))},
            {"n", gens.n},
            {"l", gens.l},
            {"target", std::move(target)},
            {"convergence", to_json(table)}};
  }
  const GateSequence seq = compile(u, gens, basis, cfg);
  Json out = to_json(seq);
  if (!c.items) out.erase("items");
  out["target"] = std::move(target);
  return out;
}

inline Json run_table(const RunConfig& c) {
  TableOptions opts;
  opts.max_n = c.table_max_n;
  opts.closure = closure_options(c);
  const auto rows = dimension_table(opts);
  Json jrows = Json::array();
  bool all = true;
  for (const auto& r : rows) {
    jrows.push_back(to_json(r, c.timing));
    all = all && r.pass();
  }
  Json spin = Json::array();
  for (int n = 1; n <= c.table_max_n; ++n) {
    const SpinReport s = spin_subgroup_check(n, opts.closure);
    spin.push_back(to_json(s));
    all = all && s.pass();
  }
  return {{"rows", std::move(jrows)}, {"spin", std::move(spin)}, {"pass", all}};
}

inline Json run_mono(const RunConfig& c) {
  if (c.expr.empty()) qtorus::detail::fail(ErrorCode::invalid_argument, "mono: --expr is required");
  Monomial m = parse_monomial(c.expr, c.l, c.n);
  if (!c.times.empty()) m = mono_mul(m, parse_monomial(c.times, c.l, c.n));
  if (c.power < 0) qtorus::detail::fail(ErrorCode::invalid_argument, "mono: --pow must be >= 0");
  m = mono_pow(m, c.power);
  if (c.invert) m = mono_inv(m);
  Json out = to_json(m);
  const GeneratorSet torus = torus_T(c.n, c.l, c.max_dim);
  ComplexMatrix dense = mono_eval(parse_monomial(c.expr, c.l, c.n), torus);
  if (!c.times.empty()) dense = dense * mono_eval(parse_monomial(c.times, c.l, c.n), torus);
  ComplexMatrix powered = identity(torus.dim());
  for (int i = 0; i < c.power; ++i) powered = powered * dense;
  if (c.invert) powered = powered.adjoint().eval();
  out["dense_check"] = max_abs(mono_eval(m, torus) - powered);
  return out;
}

inline Json run_verify_sequence(const RunConfig& c) {
  if (c.sequence_path.empty()) {
    qtorus::detail::fail(ErrorCode::invalid_argument, "verify: pass --self or --sequence FILE");
  }
  const Json j = read_json_file(c.sequence_path);
  RunConfig fc = c;
  fc.family = j.at("gens").get<std::string>();
  fc.n = j.at("n").get<int>();
  fc.l = j.at("l").get<int>();
  const GeneratorSet gens = build_family(fc);
  const ComplexMatrix v = evaluate(items_from_json(j), gens);
  Json out = {{"gens", fc.family},
              {"n", fc.n},
              {"l", fc.l},
              {"gate_count", j.at("items").size()},
              {"unitarity_deviation", unitarity_deviation(v)}};
  if (!c.target_path.empty() || j.contains("target")) {
    RunConfig tc = c;
    if (c.target_path.empty()) {
      const Json& t = j.at("target");
      tc.target_kind = t.value("kind", std::string("random"));
      tc.seed = t.value("seed", c.seed);
      if (tc.target_kind == "file") {
        qtorus::detail::fail(ErrorCode::invalid_argument, "verify: pass --target for file targets");
      }
    }
    const ErrorMetrics err = error_metrics(load_target(tc, gens.dim()), v);
    out["frob_error"] = err.frob_dist;
    out["phase_invariant_error"] = err.phase_invariant_dist;
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Output schemas, checked by `verify --self`

struct FieldSpec {
  std::string key;
  std::string type;  // integer, number, boolean, string, array, object, number|null
};

struct CommandSchema {
  std::string name;
  std::vector<std::string> argv;
  int expected_exit = kExitOk;
  std::vector<FieldSpec> fields;  // stdout fields, or error fields on failure
};

inline std::vector<FieldSpec> error_schema() {
  return {{"error", "object"}, {"error.code", "string"}, {"error.message", "string"}};
}

inline std::vector<CommandSchema> command_schemas() {
  return {
      {"gens", {"gens", "--family", "clifford_two_local", "--n", "2"}, kExitOk,
       {{"family", "string"}, {"n", "integer"}, {"l", "integer"}, {"dim", "integer"},
        {"count", "integer"}, {"elements", "array"}, {"notes", "array"}}},
      {"relations", {"relations", "--family", "torus_full", "--n", "2", "--l", "3"}, kExitOk,
       {{"family", "string"}, {"n", "integer"}, {"l", "integer"}, {"checks", "array"},
        {"max_locality", "integer"}, {"max_violation", "number"}}},
      {"closure", {"closure", "--family", "clifford_full", "--n", "2"}, kExitOk,
       {{"family", "string"}, {"n", "integer"}, {"l", "integer"}, {"matrix_dim", "integer"},
        {"dim", "integer"}, {"dim_ambient", "integer"}, {"max_generation", "integer"},
        {"recipe_error", "number"}, {"elements", "array"}, {"center_index", "number|null"},
        {"adjoin_phase", "boolean"}, {"generators", "integer"}}},
      {"span", {"span", "--l", "3", "--n", "1"}, kExitOk,
       {{"l", "integer"}, {"n", "integer"}, {"rank", "integer"}, {"predicted", "integer"},
        {"pass", "boolean"}}},
      {"compile",
       {"compile", "--family", "clifford_two_local", "--n", "2", "--slices", "4", "--seed", "3"},
       kExitOk,
       {{"gens", "string"}, {"n", "integer"}, {"l", "integer"}, {"target_dim", "integer"},
        {"items", "array"}, {"report", "object"}, {"report.phase_invariant_error", "number"},
        {"report.frob_error", "number"}, {"report.gate_count", "integer"},
        {"report.slices", "integer"}, {"target", "object"}}},
      {"compile sweep",
       {"compile", "--family", "clifford_two_local", "--n", "2", "--target-kind", "cnot",
        "--sweep", "8"},
       kExitOk,
       {{"gens", "string"}, {"convergence", "object"}, {"convergence.rows", "array"},
        {"convergence.monotone", "boolean"}, {"convergence.improvement", "number"}}},
      {"table", {"table", "--max-n", "1"}, kExitOk,
       {{"rows", "array"}, {"spin", "array"}, {"pass", "boolean"}}},
      {"mono", {"mono", "--l", "3", "--n", "1", "--expr", "T1", "--times", "T0"}, kExitOk,
       {{"l", "integer"}, {"n", "integer"}, {"phase_exp", "integer"}, {"exps", "array"},
        {"text", "string"}, {"dense_check", "number"}}},
      {"compile not_member",
       {"compile", "--family", "clifford_full", "--n", "2", "--seed", "5"}, kExitNumerical,
       {{"error", "object"}, {"error.code", "string"}, {"error.message", "string"},
        {"error.residual", "number"}}},
      {"unknown flag", {"closure", "--no-such-flag"}, kExitValidation, error_schema()},
      {"capacity", {"gens", "--family", "clifford_full", "--n", "13"}, kExitValidation,
       error_schema()},
  };
}

inline const Json* lookup(const Json& j, const std::string& dotted) {
  const Json* cur = &j;
  std::size_t start = 0;
  while (start <= dotted.size()) {
    const std::size_t dot = dotted.find('.', start);
    const std::string key =
        dotted.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
    if (!cur->is_object() || !cur->contains(key)) return nullptr;
    cur = &(*cur)[key];
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  return cur;
}

inline bool has_type(const Json& v, const std::string& type) {
  if (type == "integer") return v.is_number_integer();
  if (type == "number") return v.is_number();
  if (type == "boolean") return v.is_boolean();
  if (type == "string") return v.is_string();
  if (type == "array") return v.is_array();
  if (type == "object") return v.is_object();
  if (type == "number|null") return v.is_number() || v.is_null();
  return false;
}

/// Problems found in `doc` against `fields` (empty when valid).
inline std::vector<std::string> check_schema(const Json& doc, const std::vector<FieldSpec>& fields) {
  std::vector<std::string> problems;
  for (const auto& f : fields) {
    const Json* v = lookup(doc, f.key);
    if (v == nullptr) {
      problems.push_back("missing " + f.key);
    } else if (!has_type(*v, f.type)) {
      problems.push_back(f.key + " is not " + f.type);
    }
  }
  return problems;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

namespace detail {

inline Json run_self_test() {
  Json results = Json::array();
  bool all = true;
  for (const auto& s : command_schemas()) {
    std::ostringstream o;
    std::ostringstream e;
    const int code = run(s.argv, o, e);
    std::vector<std::string> problems;
    if (code != s.expected_exit) {
      problems.push_back("exit " + std::to_string(code) + ", expected " +
                         std::to_string(s.expected_exit));
    }
    const std::string text = s.expected_exit == kExitOk ? o.str() : e.str();
    Json doc;
    try {
      doc = Json::parse(text);
    } catch (const Json::exception&) {
      problems.push_back("output is not JSON");
    }
    if (problems.empty()) problems = check_schema(doc, s.fields);
    if (s.expected_exit == kExitOk && problems.empty()) {
      // determinism: the same argv must reproduce the same bytes
      std::ostringstream again;
      std::ostringstream e2;
      run(s.argv, again, e2);
      if (again.str() != o.str()) problems.push_back("output not reproducible");
    }
    all = all && problems.empty();
    results.push_back({{"name", s.name}, {"argv", s.argv}, {"exit_code", code},
                       {"valid", problems.empty()}, {"problems", problems}});
  }
  return {{"self_test", std::move(results)}, {"pass", all}};
}

inline void add_family_options(CLI::App* sub, RunConfig& c, bool family_required) {
  auto* f = sub->add_option("--family", c.family,
                            "pauli, weyl, tau, clifford_full, clifford_universal, "
                            "clifford_two_local, torus_full, torus_split, torus_two_local");
  if (family_required) f->required();
  sub->add_option("--n", c.n, "number of sites")->capture_default_str();
  sub->add_option("--l", c.l, "levels per site")->capture_default_str();
  sub->add_option("--variant", c.variant, "Gamma_u factor count (3 or 4)")
      ->check(CLI::IsMember({3, 4}))
      ->capture_default_str();
  sub->add_option("--max-dim", c.max_dim, "capacity cap on matrix dimension")->capture_default_str();
}

inline void add_closure_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--tol", c.closure_tol, "closure admission tolerance")->capture_default_str();
  sub->add_flag("--adjoin-phase", c.adjoin_phase, "seed the closure with i*I");
}

inline int fail_json(std::ostream& err, const std::string& code, const std::string& message,
                     int exit_code) {
  err << Json{{"error", {{"code", code}, {"message", message}}}}.dump() << '\n';
  return exit_code;
}

inline int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::not_member:
    case ErrorCode::depth_exhausted:
      return kExitNumerical;
    default:
      return kExitValidation;
  }
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Generator sets, Lie closures and gate-sequence compilation", "qtorus"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--out", c.out_path, "write the JSON result to this file");

  auto* gens = app.add_subcommand("gens", "list a generator family");
  detail::add_family_options(gens, c, true);
  gens->add_flag("--matrices", c.matrices, "include dense matrices");

  auto* rel = app.add_subcommand("relations", "check the family's defining relations");
  detail::add_family_options(rel, c, true);

  auto* clo = app.add_subcommand("closure", "Lie closure of a family");
  detail::add_family_options(clo, c, true);
  detail::add_closure_options(clo, c);

  auto* span = app.add_subcommand("span", "rank of the l^{2n} torus monomials");
  span->add_option("--n", c.n, "number of sites")->capture_default_str();
  span->add_option("--l", c.l, "levels per site")->capture_default_str();
  span->add_option("--max-dim", c.max_dim, "capacity cap")->capture_default_str();

  auto* comp = app.add_subcommand("compile", "compile a unitary into generator exponentials");
  detail::add_family_options(comp, c, false);
  detail::add_closure_options(comp, c);
  comp->add_option("--target", c.target_path, "JSON file holding the target matrix");
  comp->add_option("--target-kind", c.target_kind, "random, cnot or identity")
      ->check(CLI::IsMember({"random", "cnot", "identity"}))
      ->capture_default_str();
  comp->add_option("--seed", c.seed, "seed for the random target")->capture_default_str();
  comp->add_option("--slices", c.slices, "Trotter slices M")->check(CLI::PositiveNumber)
      ->capture_default_str();
  comp->add_option("--sweep", c.sweep_max, "report errors for M = slices, 2*slices, ..., this")
      ->check(CLI::PositiveNumber);
  comp->add_option("--target-error", c.target_error, "double M until this error is reached");
  comp->add_option("--max-slices", c.max_slices, "limit for --target-error")->capture_default_str();
  comp->add_option("--max-depth", c.max_depth, "maximum commutator depth")->capture_default_str();
  comp->add_option("--tau-clip", c.tau_clip, "largest |tau| per gate")->capture_default_str();
  comp->add_option("--order", c.trotter_order, "Trotter order (1 or 2)")
      ->check(CLI::IsMember({1, 2}))
      ->capture_default_str();
  comp->add_option("--synthesis", c.synthesis, "auto or group")
      ->check(CLI::IsMember({"auto", "group"}))
      ->capture_default_str();
  comp->add_flag("--merge", c.merge, "merge adjacent gates on the same generator");
  comp->add_flag("!--no-items", c.items, "omit the gate list");
  comp->add_option("--membership-tol", c.membership_tol, "membership residual tolerance")
      ->capture_default_str();
  comp->add_option("--unitary-tol", c.unitary_tol, "unitarity tolerance")->capture_default_str();

  auto* ver = app.add_subcommand("verify", "self-test, or evaluate a sequence file");
  ver->add_flag("--self", c.self, "run every subcommand and validate its JSON schema");
  ver->add_option("--sequence", c.sequence_path, "sequence JSON written by compile");
  ver->add_option("--target", c.target_path, "target matrix to measure the sequence against");
  ver->add_option("--max-dim", c.max_dim, "capacity cap")->capture_default_str();

  auto* table = app.add_subcommand("table", "closure dimensions against predictions");
  table->add_option("--max-n", c.table_max_n, "largest n for the Clifford rows")
      ->check(CLI::Range(1, 6))
      ->capture_default_str();
  table->add_flag("--timing", c.timing, "include per-row seconds (breaks byte determinism)");
  detail::add_closure_options(table, c);

  auto* mono = app.add_subcommand("mono", "exact monomial arithmetic with a dense check");
  mono->add_option("--n", c.n, "number of sites")->capture_default_str();
  mono->add_option("--l", c.l, "levels per site")->capture_default_str();
  mono->add_option("--expr", c.expr, "monomial, e.g. \"mu^2 T0^1 T1^2\"")->required();
  mono->add_option("--times", c.times, "right factor");
  mono->add_option("--pow", c.power, "power applied after the product")->capture_default_str();
  mono->add_flag("--inv", c.invert, "invert the result");

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.emplace_back("qtorus");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    return detail::fail_json(err, "usage", e.what(), kExitValidation);
  }
  c.subcommand = app.get_subcommands().front()->get_name();
  if (c.subcommand == "compile" && comp->count("--family") == 0) {
    c.family = "clifford_two_local";
    if (comp->count("--n") == 0) c.n = 2;
  }

  Json result;
  try {
    if (c.subcommand == "gens") result = detail::run_gens(c);
    else if (c.subcommand == "relations") result = detail::run_relations(c);
    else if (c.subcommand == "closure") result = detail::run_closure(c);
    else if (c.subcommand == "span") result = detail::run_span(c);
    else if (c.subcommand == "compile") result = detail::run_compile(c);
    else if (c.subcommand == "verify") result = c.self ? detail::run_self_test() : detail::run_verify_sequence(c);
    else if (c.subcommand == "table") result = detail::run_table(c);
    else if (c.subcommand == "mono") result = detail::run_mono(c);
  } catch (const Error& e) {
    err << error_json(e).dump() << '\n';
    return detail::exit_code_for(e.code());
  } catch (const Json::exception& e) {
    return detail::fail_json(err, "invalid_argument", e.what(), kExitValidation);
  }

  const std::string text = result.dump(2) + "\n";
  if (c.out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(c.out_path);
    if (!f) {
      return detail::fail_json(err, "invalid_argument", "cannot write '" + c.out_path + "'",
                               kExitValidation);
    }
    f << text;
  }
  if (c.subcommand == "verify" && c.self && !result.at("pass").get<bool>()) return kExitNumerical;
  return kExitOk;
}

}  // namespace qtorus::cli
