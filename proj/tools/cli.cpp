// Copyright 2026 The eprkit Authors
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

#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "eprkit/bounds.hpp"
#include "eprkit/catalog.hpp"
#include "eprkit/json_io.hpp"
#include "eprkit/protocol.hpp"
#include "eprkit/realisation.hpp"

namespace eprkit::cli {

namespace {

// Bad input files or arguments; exit code 2.
class InputFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A check that the command performs did not hold; exit code 1.
class CheckFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr double kZeroBand = 1e-12;
constexpr double kBracketSlack = 1e-4;
constexpr double kQuantumFloor = -1e-7;

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double validation_tolerance() {
  const char* env = std::getenv("EPRKIT_TOL");
  if (env == nullptr || *env == '\0') return kValidationTolerance;
  try {
    size_t used = 0;
    const double v = std::stod(env, &used);
    if (used != std::string(env).size() || !std::isfinite(v) || v <= 0.0) throw std::invalid_argument("range");
    return v;
  } catch (const std::exception&) {
    throw InputFailure(std::string("EPRKIT_TOL must be a positive number, got '") + env + "'");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputFailure("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// FNV-1a, used only to identify inputs in reports.
std::string digest(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

struct LoadedInput {
  std::string path;
  std::string digest;
  Json json;
};

LoadedInput load_input(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return {path, digest(text), parse_json_text(text)};
  } catch (const std::exception& e) {
    throw InputFailure(path + ": " + e.what());
  }
}

template <class Fn>
auto decode(const LoadedInput& in, Fn fn) {
  try {
    return fn(in.json);
  } catch (const std::exception& e) {
    throw InputFailure(in.path + ": " + e.what());
  }
}

Json input_entry(const LoadedInput& in) { return Json{{"path", in.path}, {"digest", in.digest}}; }

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputFailure("cannot write '" + path + "'");
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

std::string sign_label(double v) {
  if (std::abs(v) <= kZeroBand) return "zero";
  return v < 0.0 ? "negative" : "positive";
}

// Column names of a table's slice keys.
std::pair<std::vector<std::string>, std::vector<std::string>> csv_columns(const CorrelationTable& t, size_t n_out,
                                                                           size_t n_set) {
  auto numbered = [](const std::string& base, int count) {
    std::vector<std::string> v;
    if (count == 1) return std::vector<std::string>{base};
    for (int i = 1; i <= count; ++i) v.push_back(base + std::to_string(i));
    return v;
  };
  std::vector<std::string> outs, sets;
  const int n = t.qubits;
  auto append = [](std::vector<std::string>& dst, const std::vector<std::string>& src) {
    dst.insert(dst.end(), src.begin(), src.end());
  };
  switch (t.scenario) {
    case Scenario::bwi:
      outs = {"a", "b"};
      append(outs, numbered("c", n));
      sets = {"x", "y", "z"};
      append(sets, numbered("w", n));
      break;
    case Scenario::mdi:
      outs = {"a", "b"};
      append(outs, numbered("c", n));
      sets = {"x", "y"};
      append(sets, numbered("z", n));
      break;
    case Scenario::channel:
      outs = {"a", "b", "c", "d"};
      sets = {"x", "y", "z", "w", "u"};
      break;
    case Scenario::standard: break;
  }
  if (outs.size() != n_out || sets.size() != n_set) {
    outs.clear();
    sets.clear();
    for (size_t i = 0; i < n_out; ++i) outs.push_back("o" + std::to_string(i));
    for (size_t i = 0; i < n_set; ++i) sets.push_back("s" + std::to_string(i));
  }
  return {outs, sets};
}

std::string table_to_csv(const CorrelationTable& t) {
  std::ostringstream os;
  if (t.slice.empty()) return "probability\n";
  const auto& first = t.slice.begin()->first;
  const auto [outs, sets] = csv_columns(t, first.outcomes.size(), first.settings.size());
  for (const auto& c : outs) os << c << ',';
  for (const auto& c : sets) os << c << ',';
  os << "probability\n";
  for (const auto& [k, v] : t.slice) {
    for (int o : k.outcomes) os << o << ',';
    for (int s : k.settings) os << (s == kStar ? std::string("*") : std::to_string(s)) << ',';
    os << fmt17(v) << '\n';
  }
  return os.str();
}

// Mean and spread of the slice mass per setting tuple.
std::pair<double, double> mass_per_setting(const CorrelationTable& t) {
  std::map<std::vector<int>, double> mass;
  for (const auto& [k, v] : t.slice) mass[k.settings] += v;
  if (mass.empty()) return {0.0, 0.0};
  double lo = mass.begin()->second, hi = lo, sum = 0.0;
  for (const auto& [s, m] : mass) {
    lo = std::min(lo, m);
    hi = std::max(hi, m);
    sum += m;
  }
  return {sum / static_cast<double>(mass.size()), hi - lo};
}

Json base_report(const std::vector<std::string>& args) {
  std::string echo = "eprkit";
  for (const auto& a : args) echo += " " + a;
  return Json{{"command", echo}};
}

std::chrono::steady_clock::time_point g_start;

// Reports carry the elapsed wall-clock time as their last field.
void print(std::ostream& out, Json report) {
  report["duration_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - g_start).count();
  out << dump_json(report) << '\n';
}

// ---- validate -------------------------------------------------------------

struct ValidateArgs {
  std::string path;
  std::string scenario;
};

int cmd_validate(const ValidateArgs& a, Json report, std::ostream& out) {
  const double tol = validation_tolerance();
  const LoadedInput in = load_input(a.path);
  const Assemblage as = decode(in, assemblage_from_json);
  report["inputs"] = Json::array({input_entry(in)});
  report["tolerances"] = Json{{"validation", tol}};
  if (!a.scenario.empty()) {
    Scenario wanted;
    try {
      wanted = scenario_from_string(a.scenario);
    } catch (const Error& e) {
      throw InputFailure(e.what());
    }
    if (wanted != scenario_of(as)) {
      report["passed"] = false;
      report["error"] = "file holds a " + to_string(scenario_of(as)) + " assemblage, not " + a.scenario;
      print(out, report);
      return kExitDomain;
    }
  }
  const ValidationReport rep = validate(as, tol);
  report["passed"] = rep.passed();
  report["validation"] = validation_to_json(rep);
  std::vector<std::string> failed;
  for (const auto& c : rep.conditions)
    if (!c.passed) failed.push_back(c.name);
  report["failed_conditions"] = failed;
  print(out, report);
  return rep.passed() ? kExitOk : kExitDomain;
}

// ---- eval -----------------------------------------------------------------

struct EvalArgs {
  std::string functional;
  std::string assemblage;
  std::string correlations;
};

int cmd_eval(const EvalArgs& a, Json report, std::ostream& out) {
  if (a.assemblage.empty() == a.correlations.empty()) {
    throw InputFailure("eval needs exactly one of --assemblage and --correlations");
  }
  const LoadedInput fin = load_input(a.functional);
  const AnyFunctional f = decode(fin, functional_from_json);
  Json inputs = Json::array({input_entry(fin)});
  double value = 0.0;
  if (!a.assemblage.empty()) {
    const LoadedInput ain = load_input(a.assemblage);
    const Assemblage as = decode(ain, assemblage_from_json);
    inputs.push_back(input_entry(ain));
    const auto* epr = std::get_if<EPRFunctional>(&f);
    if (epr == nullptr) throw CheckFailure("a Bell functional is evaluated on correlations, not on an assemblage");
    value = evaluate_epr(*epr, as);
    report["form"] = "epr";
  } else {
    const LoadedInput cin = load_input(a.correlations);
    const CorrelationTable t = decode(cin, correlations_from_json);
    inputs.push_back(input_entry(cin));
    const BellCoefficients xi = std::holds_alternative<BellCoefficients>(f) ? std::get<BellCoefficients>(f)
                                                                             : bell_from_epr(std::get<EPRFunctional>(f));
    value = evaluate_bell(xi, t);
    report["form"] = "bell";
    const double factor = bell_factor(xi.scenario, xi.qubits);
    report["assemblage_scale_factor"] = factor;
    report["assemblage_scale_value"] = value / factor;
    if (t.diagnostic) report["note"] = "diagnostic table: the value is reported but does not certify";
  }
  report["inputs"] = inputs;
  report["value"] = value;
  report["value_text"] = fmt17(value);
  report["sign"] = sign_label(value);
  report["tolerances"] = Json{{"zero_band", kZeroBand}};
  print(out, report);
  return kExitOk;
}

// ---- bound ----------------------------------------------------------------

struct BoundArgs {
  std::string kind;
  std::string path;
  std::string functional;
  std::uint64_t seed = 0;
  int restarts = 50;
};

int cmd_bound(const BoundArgs& a, Json report, std::ostream& out) {
  const std::string path = !a.functional.empty() ? a.functional : a.path;
  if (path.empty()) throw InputFailure("bound needs a functional file");
  const LoadedInput in = load_input(path);
  const AnyFunctional any = decode(in, functional_from_json);
  const auto* f = std::get_if<EPRFunctional>(&any);
  if (f == nullptr) throw CheckFailure("bounds are computed for EPR functionals");
  report["inputs"] = Json::array({input_entry(in)});

  BoundReport br;
  int code = kExitOk;
  if (a.kind == "classical") {
    br = classical_bound(*f);
    report["tolerances"] = Json{{"enumeration_guard", kEnumerationGuard}};
  } else if (a.kind == "ns-cert") {
    br = ns_lower_bound(*f);
    const BwIAssemblage ptp = ptp_assemblage();
    if (f->operators.alphabets() == ptp.alphabets() && f->operators.dim() == ptp.dim()) {
      const double achieved = evaluate_epr(*f, ptp);
      if (std::abs(achieved - br.value) <= kZeroBand) {
        br.tight = true;
        br.note = "achieved-by-catalog: the PTP assemblage attains this value";
      }
      report["catalog_value"] = achieved;
    }
    report["tolerances"] = Json{{"achievability", kZeroBand}};
  } else {
    SeesawOptions opt;
    opt.seed = a.seed;
    opt.restarts = a.restarts;
    br = seesaw_quantum(*f, opt);
    report["seed"] = a.seed;
    report["tolerances"] = Json{{"relative_improvement", opt.relative_tolerance},
                                {"max_iterations", opt.max_iterations},
                                {"bracket_slack", kBracketSlack}};
    if (f->bounds.quantum_lower && f->bounds.quantum_upper) {
      const double lo = *f->bounds.quantum_lower - kBracketSlack;
      const double hi = *f->bounds.quantum_upper + kBracketSlack;
      const bool within = br.value >= lo && br.value <= hi;
      report["bracket"] = Json{{"lower", lo}, {"upper", hi}, {"within", within}};
      if (!within) code = kExitDomain;
    }
  }
  report["bound"] = bound_report_to_json(br);
  report["value"] = br.value;
  report["value_text"] = fmt17(br.value);
  print(out, report);
  return code;
}

// ---- simulate ---------------------------------------------------------------

struct SimulateArgs {
  std::string scenario;
  std::string assemblage;
  double r = 1.0;
  std::optional<double> r_out;
  std::string mixing = "joint";
  std::string measurement = "phi-plus";
  int n = 0;
  std::string out;
  std::string format = "json";
};

HermitianOperator load_measurement(const std::string& choice, int qubits_total_pairs, Json& inputs) {
  if (choice == "phi-plus") return phi_plus_projector(qubits_total_pairs);
  const LoadedInput in = load_input(choice);
  inputs.push_back(input_entry(in));
  return decode(in, [](const Json& j) { return operator_from_json(j.is_object() ? j.at("operator") : j); });
}

int cmd_simulate(const SimulateArgs& a, Json report, std::ostream& out, std::ostream& err) {
  const LoadedInput in = load_input(a.assemblage);
  const Assemblage as = decode(in, assemblage_from_json);
  Json inputs = Json::array({input_entry(in)});
  const Scenario wanted = scenario_from_string(a.scenario);
  if (scenario_of(as) != wanted) {
    throw CheckFailure("file holds a " + to_string(scenario_of(as)) + " assemblage, not " + a.scenario);
  }
  CorrelationTable t;
  if (wanted == Scenario::bwi) {
    const auto& b = std::get<BwIAssemblage>(as);
    const int n = a.n > 0 ? a.n : qubits_of_dim(b.dim());
    t = simulate_bwi(b, make_resource(n, a.r), load_measurement(a.measurement, n, inputs));
  } else if (wanted == Scenario::mdi) {
    const auto& m = std::get<MDIAssemblage>(as);
    const int n = a.n > 0 ? a.n : qubits_of_dim(m.dim());
    t = simulate_mdi(m, make_resource(n, a.r));
  } else {
    const auto& c = std::get<ChannelAssemblage>(as);
    MixingMode mode;
    if (a.mixing == "joint") mode = MixingMode::joint;
    else if (a.mixing == "independent") mode = MixingMode::independent_diagnostic;
    else throw InputFailure("--mixing must be joint or independent");
    const double r2 = a.r_out.value_or(a.r);
    t = simulate_channel(c, make_resource(1, a.r), make_resource(1, r2), load_measurement(a.measurement, 1, inputs), mode);
    report["r_out"] = r2;
  }
  const auto [mass, spread] = mass_per_setting(t);
  report["inputs"] = inputs;
  report["r"] = a.r;
  report["slice_mass"] = mass;
  report["slice_mass_spread"] = spread;
  report["entries"] = t.slice.size();
  report["diagnostic"] = t.diagnostic;
  report["tolerances"] = Json{{"povm", kPovmTolerance}};
  const std::string text = a.format == "csv" ? table_to_csv(t) : dump_json(correlations_to_json(t));
  if (!a.out.empty()) {
    write_text(a.out, text);
    report["out"] = a.out;
    print(out, report);
  } else {
    out << text;
    if (a.format != "csv") out << '\n';
    err << "slice mass per setting: " << fmt17(mass) << '\n';
  }
  return kExitOk;
}

// ---- selftest -------------------------------------------------------------

struct SelftestArgs {
  std::string correlations;
  double epsilon = 1e-6;
  std::string marginal = "C";
};

int cmd_selftest(const SelftestArgs& a, Json report, std::ostream& out) {
  const LoadedInput in = load_input(a.correlations);
  const CorrelationTable t = decode(in, correlations_from_json);
  const double value = selftest_value(selftest_marginal(t, a.marginal));
  const double ideal = 4.0 * std::sqrt(3.0);
  const double threshold = ideal - a.epsilon;
  const bool pass = value >= threshold;
  report["inputs"] = Json::array({input_entry(in)});
  report["marginal"] = a.marginal;
  report["value"] = value;
  report["value_text"] = fmt17(value);
  report["ideal"] = ideal;
  report["threshold"] = threshold;
  report["tolerances"] = Json{{"epsilon", a.epsilon}};
  report["passed"] = pass;
  print(out, report);
  return pass ? kExitOk : kExitDomain;
}

// ---- demo-ptp ---------------------------------------------------------------

struct DemoArgs {
  std::string out;
  double r = 1.0;
  std::optional<double> tamper_aq;
  std::uint64_t seed = 0;
  int controls = 50;
};

int cmd_demo(const DemoArgs& a, Json report, std::ostream& out, std::ostream& err) {
  constexpr double kClassicalTol = 1e-10;
  constexpr double kSelfTestTol = 1e-9;
  constexpr double kBellTol = 1e-4;
  const double aq_used = a.tamper_aq.value_or(PtpConstants::almost_quantum);
  const double tol = validation_tolerance();

  Json stages = Json::array();
  std::string first_failure;
  auto stage = [&](const std::string& name, bool ok, Json details) {
    details["stage"] = name;
    details["passed"] = ok;
    stages.push_back(details);
    if (!ok && first_failure.empty()) first_failure = name;
  };

  // catalog and validation
  const BwIAssemblage ptp = ptp_assemblage();
  const EPRFunctional raw = ptp_functional(false);
  const EPRFunctional norm = ptp_functional(true, aq_used);
  const BellCoefficients xi = ptp_bell_coefficients(aq_used);
  const ValidationReport vr = validate(ptp, tol);
  stage("validate", vr.passed(), Json{{"max_residual", vr.max_residual()}});

  // bounds
  const BoundReport cb = classical_bound(raw);
  const double exact = PtpConstants::exact_classical();
  stage("classical-bound", std::abs(cb.value - exact) <= kClassicalTol,
        Json{{"value", cb.value}, {"expected", exact}, {"strategies", cb.strategies}});
  const BoundReport nb = ns_lower_bound(raw);
  const double achieved = evaluate_epr(raw, ptp);
  stage("ns-certificate", std::abs(nb.value) <= kZeroBand && std::abs(achieved) <= kZeroBand,
        Json{{"value", nb.value}, {"achieved_by_ptp", achieved}});

  // activation run at r = 1
  const CorrelationTable table = simulate_bwi(ptp, make_resource(1, 1.0), phi_plus_projector(1));
  const double ie = selftest_value(selftest_marginal(table));
  stage("self-test", std::abs(ie - 4.0 * std::sqrt(3.0)) <= kSelfTestTol, Json{{"value", ie}, {"expected", 4.0 * std::sqrt(3.0)}});

  const double bell = evaluate_bell(xi, table);
  const double expected_bell = -PtpConstants::almost_quantum / 4.0;
  stage("bell", std::abs(bell - expected_bell) <= kBellTol && bell < -0.05,
        Json{{"value", bell},
             {"value_text", fmt17(bell)},
             {"expected", expected_bell},
             {"value_times_four", 4.0 * bell},
             {"epr_value", evaluate_epr(norm, ptp)},
             {"almost_quantum_constant", aq_used}});

  // quantum controls at the requested r
  double worst = std::numeric_limits<double>::infinity();
  for (int i = 0; i < a.controls; ++i) {
    const auto inst = random_quantum(Scenario::bwi, a.seed + static_cast<std::uint64_t>(i));
    const auto& q = std::get<BwIAssemblage>(inst.assemblage);
    worst = std::min(worst, evaluate_bell(xi, simulate_bwi(q, make_resource(1, a.r), phi_plus_projector(1))));
  }
  stage("quantum-controls", worst >= kQuantumFloor,
        Json{{"count", a.controls}, {"r", a.r}, {"first_seed", a.seed}, {"minimum", worst}});

  if (a.r != 1.0) {
    const CorrelationTable at_r = simulate_bwi(ptp, make_resource(1, a.r), phi_plus_projector(1));
    report["ptp_bell_value_at_r"] = evaluate_bell(xi, at_r);
  }
  report["stages"] = stages;
  report["tolerances"] = Json{{"validation", tol},
                              {"classical", kClassicalTol},
                              {"ns", kZeroBand},
                              {"self_test", kSelfTestTol},
                              {"bell", kBellTol},
                              {"quantum_floor", kQuantumFloor}};
  report["passed"] = first_failure.empty();
  if (!first_failure.empty()) report["failed_stage"] = first_failure;
  if (!a.out.empty()) write_text(a.out, dump_json(report));
  print(out, report);
  if (!first_failure.empty()) {
    err << "demo-ptp: stage '" << first_failure << "' failed\n";
    return kExitDomain;
  }
  return kExitOk;
}

// ---- dump -----------------------------------------------------------------

struct DumpArgs {
  std::string object;
  std::string out;
  std::string format = "json";
};

const std::vector<std::string>& dump_objects() {
  static const std::vector<std::string> names{
      "ptp-assemblage", "ptp-assemblage-additive", "ptp-functional-raw", "ptp-functional-normalized",
      "ptp-bell",       "ptp-table",               "canonical-resource", "mdi-ptp",
      "mdi-ptp-probabilities", "embedded-channel", "embedded-channel-functional", "ptp-functional-two-qubit", "chsh-mdi-functional"};
  return names;
}

int cmd_dump(const DumpArgs& a, std::ostream& out) {
  std::optional<CorrelationTable> table;
  Json j;
  if (a.object == "ptp-assemblage") j = assemblage_to_json(ptp_assemblage());
  else if (a.object == "ptp-assemblage-additive") j = assemblage_to_json(ptp_assemblage(PtpConvention::additive));
  else if (a.object == "ptp-functional-raw") j = functional_to_json(ptp_functional(false));
  else if (a.object == "ptp-functional-normalized") j = functional_to_json(ptp_functional(true));
  else if (a.object == "ptp-bell") j = functional_to_json(ptp_bell_coefficients());
  else if (a.object == "ptp-table") table = simulate_bwi(ptp_assemblage(), make_resource(1, 1.0), phi_plus_projector(1));
  else if (a.object == "canonical-resource") j = assemblage_to_json(canonical_selftest_strategy().states);
  else if (a.object == "mdi-ptp") j = assemblage_to_json(mdi_ptp_assemblage());
  else if (a.object == "mdi-ptp-probabilities") table = mdi_ptp_probabilities();
  else if (a.object == "embedded-channel") j = assemblage_to_json(embedded_ptp_channel().first);
  else if (a.object == "embedded-channel-functional") j = functional_to_json(embedded_ptp_channel().second);
  else if (a.object == "chsh-mdi-functional") j = functional_to_json(chsh_mdi_functional());
  else if (a.object == "ptp-functional-two-qubit") j = functional_to_json(ptp_two_qubit_functional());
  else throw InputFailure("unknown object '" + a.object + "'");

  std::string text;
  if (table) {
    text = a.format == "csv" ? table_to_csv(*table) : dump_json(correlations_to_json(*table));
  } else {
    if (a.format == "csv") throw InputFailure("csv output is available for correlation tables only");
    text = dump_json(j);
  }
  if (!a.out.empty()) {
    write_text(a.out, text);
  } else {
    out << text;
    if (text.empty() || text.back() != '\n') out << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"eprkit: assemblages, functionals and activation protocols for generalised EPR scenarios"};
  app.require_subcommand(1);

  ValidateArgs va;
  auto* validate_cmd = app.add_subcommand("validate", "Check the no-signalling conditions of an assemblage file");
  validate_cmd->add_option("path", va.path, "Assemblage JSON")->required();
  validate_cmd->add_option("--scenario", va.scenario, "Expected scenario")
      ->check(CLI::IsMember({"standard", "bwi", "mdi", "channel"}));

  EvalArgs ea;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a functional");
  eval_cmd->add_option("--functional", ea.functional, "Functional JSON")->required();
  eval_cmd->add_option("--assemblage", ea.assemblage, "Assemblage JSON");
  eval_cmd->add_option("--correlations", ea.correlations, "Correlation table JSON");

  BoundArgs ba;
  auto* bound_cmd = app.add_subcommand("bound", "Bounds on a BwI functional");
  bound_cmd->add_option("kind", ba.kind, "classical, ns-cert or seesaw")
      ->required()
      ->check(CLI::IsMember({"classical", "ns-cert", "seesaw"}));
  bound_cmd->add_option("path", ba.path, "Functional JSON");
  bound_cmd->add_option("--functional", ba.functional, "Functional JSON");
  bound_cmd->add_option("--seed", ba.seed, "Seed for seesaw restarts");
  bound_cmd->add_option("--restarts", ba.restarts, "Seesaw restarts")->check(CLI::PositiveNumber);

  SimulateArgs sa;
  auto* sim_cmd = app.add_subcommand("simulate", "Simulate an activation protocol");
  sim_cmd->add_option("scenario", sa.scenario, "bwi, mdi or channel")->required()->check(CLI::IsMember({"bwi", "mdi", "channel"}));
  sim_cmd->add_option("--assemblage", sa.assemblage, "Assemblage JSON")->required();
  sim_cmd->add_option("--r", sa.r, "Mixing parameter of the resource")->check(CLI::Range(0.0, 1.0));
  sim_cmd->add_option("--r-out", sa.r_out, "Mixing parameter of the output resource (channel)")->check(CLI::Range(0.0, 1.0));
  sim_cmd->add_option("--mixing", sa.mixing, "joint or independent (channel, diagnostic only)")
      ->check(CLI::IsMember({"joint", "independent"}));
  sim_cmd->add_option("--measurement", sa.measurement, "phi-plus or a JSON matrix file");
  sim_cmd->add_option("--n", sa.n, "Resource qubit count")->check(CLI::Range(1, 2));
  sim_cmd->add_option("--out", sa.out, "Write the table here");
  sim_cmd->add_option("--format", sa.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  SelftestArgs ta;
  auto* st_cmd = app.add_subcommand("selftest", "Check the self-test expression on a table");
  st_cmd->add_option("--correlations", ta.correlations, "Correlation table JSON")->required();
  st_cmd->add_option("--epsilon", ta.epsilon, "Allowed shortfall from 4*sqrt(3)");
  st_cmd->add_option("--marginal", ta.marginal, "Marginal name (C or D)");

  DemoArgs da;
  auto* demo_cmd = app.add_subcommand("demo-ptp", "Run the PTP activation pipeline end to end");
  demo_cmd->add_option("--out", da.out, "Also write the report here");
  demo_cmd->add_option("--r", da.r, "Mixing parameter for the quantum controls")->check(CLI::Range(0.0, 1.0));
  demo_cmd->add_option("--tamper-aq", da.tamper_aq, "Replace the almost-quantum constant (negative control)");
  demo_cmd->add_option("--seed", da.seed, "First seed of the quantum controls");

  DumpArgs xa;
  auto* dump_cmd = app.add_subcommand("dump", "Export a catalog object");
  dump_cmd->add_option("object", xa.object, "Object name")->required()->check(CLI::IsMember(dump_objects()));
  dump_cmd->add_option("--out", xa.out, "Write here instead of stdout");
  dump_cmd->add_option("--format", xa.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "eprkit: " << e.what() << '\n';
    return kExitInput;
  }

  g_start = std::chrono::steady_clock::now();
  Json report = base_report(args);

  try {
    if (*validate_cmd) return cmd_validate(va, report, out);
    if (*eval_cmd) return cmd_eval(ea, report, out);
    if (*bound_cmd) return cmd_bound(ba, report, out);
    if (*sim_cmd) return cmd_simulate(sa, report, out, err);
    if (*st_cmd) return cmd_selftest(ta, report, out);
    if (*demo_cmd) return cmd_demo(da, report, out, err);
    if (*dump_cmd) return cmd_dump(xa, out);
  } catch (const InputFailure& e) {
    err << "eprkit: " << e.what() << '\n';
    return kExitInput;
  } catch (const ParseError& e) {
    err << "eprkit: " << e.what() << '\n';
    return kExitInput;
  } catch (const CheckFailure& e) {
    err << "eprkit: " << e.what() << '\n';
    return kExitDomain;
  } catch (const Error& e) {
    err << "eprkit: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitInput;
}

}  // namespace eprkit::cli
