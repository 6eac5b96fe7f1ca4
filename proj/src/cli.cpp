// Copyright 2026 The psym Authors
// SPDX-License-Identifier: Apache-2.0

#include "psym/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "psym/diagonal_map.hpp"
#include "psym/invariants.hpp"

namespace psym {

using nlohmann::json;

Mat charge_operator(const NambuSpace& space) {
  if (space.doublings == 0) {
    Mat q = Mat::Identity(space.dim(), space.dim());
    q.bottomRightCorner(space.n, space.n) *= -1.0;
    return q;
  }
  const Mat base = charge_operator(make_nambu(space.n / 2, space.doublings - 1));
  Mat q = Mat::Zero(space.dim(), space.dim());
  q.topLeftCorner(base.rows(), base.cols()) = base;
  q.bottomRightCorner(base.rows(), base.cols()) = base;
  return q;
}

namespace {

constexpr const char* kCsvHelp =
    "CSV (--csv): validate writes index,k,t,pseudo_max,fermi_max; invariant writes\n"
    "record,index,k,t,a,b with (a,b) = (|Pf|, arg Pf) or (|det U|, arg det U) per point,\n"
    "(winding or flux, 0) per plaquette, (parity, 0) per self-antipodal point.";

struct Config {
  double tol = kAlgTol;
  double continuity = 0.5;
  std::string config_path;
  std::string input;
  std::string output = "-";
  std::string csv;
  std::string name;
  std::string label;
  std::string kind;
  bool trivial = false;
  int N = 64;
  int M = 33;
  int n = 1;
  int n_plus = 0;
  int k_index = 0;
  int i_index = -1;
  int generator = 0;
  int point = -1;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << text;
}

Bundle read_bundle(const std::string& path) {
  if (path.empty()) throw InputError("--input is required");
  return deserialize_bundle(read_json_file(path));
}

void write_bundle(const Bundle& b, const std::string& path, std::ostream& out) {
  write_text(path, serialize_bundle(b).dump() + "\n", out);
}

double check_tol(double tol, const std::string& source) {
  if (!(tol > 0.0 && tol <= 1e-3)) {
    throw InputError(source + ": tolerance must lie in (0, 1e-3]");
  }
  return tol;
}

std::string scalar_string(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) {
    std::ostringstream os;
    os.precision(17);
    os << v.get<double>();
    return os.str();
  }
  throw InputError("config: values must be scalars");
}

void apply_entries(CLI::App* app, const json& obj, bool strict, const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (value.is_object()) continue;
    CLI::Option* opt = app->get_option_no_throw("--" + key);
    if (opt == nullptr) {
      if (strict) throw InputError("config: unknown key '" + key + "' in " + where);
      continue;
    }
    if (opt->count() > 0) continue;
    opt->add_result(scalar_string(value));
    opt->run_callback();
  }
}

/// Flat keys apply wherever they match; a section named after the command must match exactly.
void merge_config(CLI::App& app, CLI::App* sub, const std::string& path) {
  const json cfg = read_json_file(path);
  if (!cfg.is_object()) throw InputError("config: top level must be an object");
  apply_entries(&app, cfg, false, "top level");
  apply_entries(sub, cfg, false, "top level");
  if (cfg.contains(sub->get_name())) {
    const json& section = cfg[sub->get_name()];
    if (!section.is_object()) throw InputError("config: section '" + sub->get_name() + "' must be an object");
    apply_entries(sub, section, true, "section '" + sub->get_name() + "'");
  }
}

int cmd_example(const Config& c, std::ostream& out) {
  Bundle b;
  if (c.name == "majorana") {
    b = example_majorana(!c.trivial, c.N);
  } else if (c.name == "dIII") {
    b = example_dIII(c.N, c.M);
  } else if (c.name == "kitaev_chain") {
    b = example_kitaev_chain(c.n, c.n_plus, c.N);
  } else {
    throw InputError("unknown example '" + c.name + "'");
  }
  write_bundle(b, c.output, out);
  return kExitOk;
}

int cmd_validate(const Config& c, std::ostream& out) {
  const Bundle b = read_bundle(c.input);
  const ValidationReport r = validate_bundle(b, {c.tol, c.continuity});
  out << format_report(r);
  out << (r.ok() ? "valid\n" : "INVALID\n");
  if (!c.csv.empty()) write_text(c.csv, diagnostics_csv(b), out);
  return r.ok() ? kExitOk : kExitInvalid;
}

int cmd_suspend(const Config& c, std::ostream& out) {
  SuspensionInput in;
  in.bundle = read_bundle(c.input);
  in.k_index = c.k_index;
  if (c.i_index >= 0) in.i_index = c.i_index;
  write_bundle(suspend(in, {c.N, c.M}), c.output, out);
  return kExitOk;
}

const Generator& pick_generator(const Bundle& b, int index) {
  if (index < 0 || index >= static_cast<int>(b.clifford.size())) {
    throw InputError("--generator " + std::to_string(index) + " out of range (bundle has " +
                     std::to_string(b.clifford.size()) + ")");
  }
  return b.clifford.generators[static_cast<std::size_t>(index)];
}

const Plane& pick_fiber(const Bundle& b, int index) {
  const int i = index < 0 ? b.grid.origin() : index;
  if (i >= b.grid.size()) throw InputError("--point out of range");
  return b.fibers[static_cast<std::size_t>(i)];
}

int cmd_invariant(const Config& c, std::ostream& out) {
  const Bundle b = read_bundle(c.input);
  InvariantResult r;
  if (c.kind == "class_d_z2") {
    r = class_d_z2(b);
  } else if (c.kind == "kane_mele_z2") {
    r = kane_mele_z2(b, pick_generator(b, c.generator));
  } else if (c.kind == "chiral_winding") {
    r = chiral_winding(b, pick_generator(b, c.generator));
  } else if (c.kind == "chern") {
    r = chern_number(b);
  } else if (c.kind == "component_index_ai") {
    r = component_index_ai(pick_fiber(b, c.point), charge_operator(b.space()));
  } else if (c.kind == "fermion_parity") {
    r.kind = InvariantKind::parity_bit;
    r.value = fermion_parity(pick_fiber(b, c.point));
    r.diagnostics = {{"point", c.point < 0 ? b.grid.origin() : c.point}};
  } else {
    throw InputError("unknown invariant kind '" + c.kind + "'");
  }
  out << r.to_json().dump() << "\n";
  if (!c.csv.empty()) write_text(c.csv, r.csv, out);
  return kExitOk;
}

json generator_list(const CliffordSet& set, const char* prefix) {
  json list = json::array();
  for (std::size_t l = 0; l < set.size(); ++l) {
    list.push_back({{"name", std::string(prefix) + std::to_string(l + 1)},
                    {"parity", to_string(set.generators[l].parity)}});
  }
  return list;
}

int cmd_classinfo(const Config& c, std::ostream& out) {
  const ClassLabel label = parse_class_label(c.label);
  const ClassInfo& info = class_info(label);
  const int minimal = label == ClassLabel::CII || label == ClassLabel::BDI ? 4 : (label == ClassLabel::D || label == ClassLabel::A ? 1 : 2);
  const NambuSpace space = make_nambu(std::max(minimal, c.n));
  json doc = {{"label", std::string(info.name)},
              {"s", info.s},
              {"complex", info.complex},
              {"true_symmetries", std::string(info.true_symmetries)},
              {"pseudo_symmetries", std::string(info.pseudo_symmetries)},
              {"next", std::string(to_string(next_class(label)))}};
  const CliffordSet set = kitaev_generators(space, label);
  doc["realization"] = {{"n", set.space.n},
                        {"doublings", set.space.doublings},
                        {"generators", generator_list(set, "J")}};
  if (label == ClassLabel::BDI || label == ClassLabel::AI) {
    const CliffordSet imag = imaginary_realization(make_nambu(space.n), label);
    doc["imaginary_realization"] = {{"n", imag.space.n}, {"generators", generator_list(imag, "K")}};
  }
  out << doc.dump(2) << "\n";
  return kExitOk;
}

int cmd_doubling(const Config& c, std::ostream& out) {
  const Bundle b = read_bundle(c.input);
  Bundle d;
  d.grid = b.grid;
  d.label = b.label;
  d.clifford = double_one_one(b.clifford);
  for (const auto& f : b.fibers) d.fibers.push_back(lift_plane(f));
  write_bundle(d, c.output, out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Ground-state bundles of free fermions: examples, suspension and invariants", "psym"};
  app.require_subcommand(1, 1);
  app.footer(kCsvHelp);
  app.add_option("--config", c.config_path, "JSON file of option values; command-line flags win");
  app.add_option("--tol", c.tol, "Algebraic tolerance in (0, 1e-3]; default from PSYM_TOL or 1e-10");

  auto* ex = app.add_subcommand("example", "Write a worked-example bundle");
  ex->add_option("--name", c.name, "majorana | dIII | kitaev_chain")->required();
  ex->add_flag("--trivial", c.trivial, "majorana: span{c} at both poles");
  ex->add_option("--N", c.N, "Circle resolution (even, >= 4)");
  ex->add_option("--M", c.M, "Latitude count for dIII (odd)");
  ex->add_option("--n", c.n, "kitaev_chain: number of bands");
  ex->add_option("--n-plus,--n_plus", c.n_plus, "kitaev_chain: occupied bands at k = 0");
  ex->add_option("--output,-o", c.output, "Output path, '-' for stdout");

  auto* va = app.add_subcommand("validate", "Check pseudo-symmetries, Fermi constraint and continuity");
  va->add_option("--input,-i", c.input, "Bundle JSON")->required();
  va->add_option("--continuity", c.continuity, "Largest allowed projector distance between neighbours");
  va->add_option("--csv", c.csv, "Write per-point diagnostics CSV");

  auto* su = app.add_subcommand("suspend", "Apply the diagonal map, consuming an imaginary generator");
  su->add_option("--input,-i", c.input, "Bundle JSON")->required();
  su->add_option("--output,-o", c.output, "Output path, '-' for stdout");
  su->add_option("--K", c.k_index, "Index of the imaginary generator to consume")->required();
  su->add_option("--I", c.i_index, "Index of a real generator to move last");
  su->add_option("--N", c.N, "Circle resolution when suspending from S^0");
  su->add_option("--M", c.M, "Latitude count when suspending from S^1 (odd)");

  auto* in = app.add_subcommand("invariant", "Compute a topological index");
  in->add_option("--input,-i", c.input, "Bundle JSON")->required();
  in->add_option("--kind", c.kind,
                 "class_d_z2 | kane_mele_z2 | chiral_winding | chern | component_index_ai | fermion_parity")
      ->required();
  in->add_option("--generator", c.generator, "Generator index (J1 or K1)");
  in->add_option("--point", c.point, "Grid point for single-plane invariants (default: origin)");
  in->add_option("--csv", c.csv, "Write per-point / per-plaquette CSV");

  auto* ci = app.add_subcommand("classinfo", "Print the table row and generator realization of a class");
  ci->add_option("--label", c.label, "Class label, e.g. DIII")->required();
  ci->add_option("--n", c.n, "Band count for the realization");

  auto* db = app.add_subcommand("doubling", "Apply (1,1) doubling to every fiber");
  db->add_option("--input,-i", c.input, "Bundle JSON")->required();
  db->add_option("--output,-o", c.output, "Output path, '-' for stdout");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    if (!c.config_path.empty()) merge_config(app, sub, c.config_path);
    if (app.get_option("--tol")->count() > 0) {
      check_tol(c.tol, "--tol");
    } else if (const char* env = std::getenv(kTolEnv)) {
      char* end = nullptr;
      const double v = std::strtod(env, &end);
      if (end == env || *end != '\0') throw InputError(std::string(kTolEnv) + ": not a number");
      c.tol = check_tol(v, kTolEnv);
    }
    const std::string& name = sub->get_name();
    if (name == "example") return cmd_example(c, out);
    if (name == "validate") return cmd_validate(c, out);
    if (name == "suspend") return cmd_suspend(c, out);
    if (name == "invariant") return cmd_invariant(c, out);
    if (name == "classinfo") return cmd_classinfo(c, out);
    return cmd_doubling(c, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const CLI::ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const NumericError& e) {
    err << "numeric error: " << e.what() << "\n";
    return kExitNumeric;
  }
}

}  // namespace psym
