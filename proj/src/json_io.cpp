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

#include "eprkit/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace eprkit {

namespace {

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) fail(std::string("missing field '") + name + "'");
  return j.at(name);
}

double number(const Json& j, const std::string& what) {
  if (!j.is_number()) fail(what + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(what + " must be finite");
  return v;
}

int integer(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) fail(what + " must be an integer");
  return j.get<int>();
}

Json alphabet_to_json(const Alphabet& a) { return Json(a.labels()); }

Alphabet alphabet_from_json(const Json& j, const std::string& name) {
  if (!j.is_array() || j.empty()) fail("alphabet " + name + " must be a non-empty array of labels");
  Alphabet a{integer(j[0], "alphabet label"), static_cast<int>(j.size())};
  for (size_t i = 0; i < j.size(); ++i) {
    if (integer(j[i], "alphabet label") != a.first + static_cast<int>(i)) fail("alphabet " + name + " must be contiguous");
  }
  return a;
}

std::vector<std::string> alphabet_names(Scenario s) {
  switch (s) {
    case Scenario::standard: return {"C", "W"};
    case Scenario::bwi: return {"A", "X", "Y"};
    case Scenario::mdi: return {"A", "B", "X"};
    case Scenario::channel: return {"A", "X"};
  }
  return {};
}

Json family_alphabets(Scenario s, const std::vector<Alphabet>& al) {
  Json out = Json::object();
  const auto names = alphabet_names(s);
  for (size_t i = 0; i < names.size(); ++i) out[names[i]] = alphabet_to_json(al[i]);
  return out;
}

std::vector<Alphabet> read_alphabets(Scenario s, const Json& j) {
  std::vector<Alphabet> out;
  for (const auto& name : alphabet_names(s)) out.push_back(alphabet_from_json(field(j, name.c_str()), name));
  return out;
}

Json elements_to_json(const IndexedOperators& ops) {
  Json out = Json::object();
  for (const auto& [key, op] : ops.elements()) out[key_to_string(key)] = operator_to_json(op);
  return out;
}

template <class Family>
void read_elements(Family& fam, const Json& j) {
  if (!j.is_object()) fail("'elements' must be an object");
  for (const auto& [k, v] : j.items()) {
    Key key;
    try {
      key = key_from_string(k);
    } catch (const InvalidArgumentError& e) {
      fail(e.what());
    }
    try {
      fam.set(key, operator_from_json(v));
    } catch (const InvalidArgumentError& e) {
      fail(e.what());
    }
  }
}

Scenario read_scenario(const Json& j) {
  const Json& s = field(j, "scenario");
  if (!s.is_string()) fail("'scenario' must be a string");
  try {
    return scenario_from_string(s.get<std::string>());
  } catch (const InvalidArgumentError& e) {
    fail(e.what());
  }
}

int dim_field(const Json& dims, const char* name) { return integer(field(dims, name), std::string("dimension ") + name); }

Json bounds_to_json(const BoundConstants& b) {
  Json out = Json::object();
  if (b.classical) out["classical"] = *b.classical;
  if (b.quantum_lower) out["quantum_lower"] = *b.quantum_lower;
  if (b.quantum_upper) out["quantum_upper"] = *b.quantum_upper;
  if (b.no_signalling) out["no_signalling"] = *b.no_signalling;
  if (b.almost_quantum) out["almost_quantum"] = *b.almost_quantum;
  return out;
}

BoundConstants bounds_from_json(const Json& j) {
  BoundConstants b;
  if (!j.is_object()) fail("'bounds' must be an object");
  for (const auto& [k, v] : j.items()) {
    const double x = number(v, "bound " + k);
    if (k == "classical") b.classical = x;
    else if (k == "quantum_lower") b.quantum_lower = x;
    else if (k == "quantum_upper") b.quantum_upper = x;
    else if (k == "no_signalling") b.no_signalling = x;
    else if (k == "almost_quantum") b.almost_quantum = x;
    else fail("unknown bound '" + k + "'");
  }
  return b;
}

}  // namespace

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(Json::array({m(i, k).real(), m(i, k).imag()}));
    rows.push_back(row);
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) fail("matrix must be a non-empty array of rows");
  const size_t n = j.size();
  Matrix m(n, n);
  for (size_t i = 0; i < n; ++i) {
    if (!j[i].is_array() || j[i].size() != n) fail("matrix must be square");
    for (size_t k = 0; k < n; ++k) {
      const Json& e = j[i][k];
      if (e.is_number()) {
        m(i, k) = cplx(number(e, "matrix entry"), 0.0);
      } else if (e.is_array() && e.size() == 2) {
        m(i, k) = cplx(number(e[0], "matrix entry"), number(e[1], "matrix entry"));
      } else {
        fail("matrix entries must be numbers or [re, im] pairs");
      }
    }
  }
  return m;
}

Json operator_to_json(const HermitianOperator& op) { return matrix_to_json(op.matrix()); }

HermitianOperator operator_from_json(const Json& j) { return HermitianOperator(matrix_from_json(j)); }

Json assemblage_to_json(const Assemblage& a) {
  Json out = Json::object();
  const Scenario s = scenario_of(a);
  out["scenario"] = to_string(s);
  std::visit(
      [&](const auto& v) {
        out["alphabets"] = family_alphabets(s, v.alphabets());
        Json dims = Json::object();
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ChannelAssemblage>) {
          dims["B_out"] = v.out_dim();
          dims["B_in"] = v.in_dim();
        } else if constexpr (std::is_same_v<T, MDIAssemblage>) {
          dims["B_in"] = v.dim();
        } else {
          dims["B"] = v.dim();
        }
        out["dims"] = dims;
        out["elements"] = elements_to_json(v);
      },
      a);
  return out;
}

Assemblage assemblage_from_json(const Json& j) {
  const Scenario s = read_scenario(j);
  const auto al = read_alphabets(s, field(j, "alphabets"));
  const Json& dims = field(j, "dims");
  const Json& elements = field(j, "elements");
  auto build = [&](auto fam) -> Assemblage {
    read_elements(fam, elements);
    return fam;
  };
  try {
    switch (s) {
      case Scenario::standard: return build(StandardAssemblage(al[0], al[1], dim_field(dims, "B")));
      case Scenario::bwi: return build(BwIAssemblage(al[0], al[1], al[2], dim_field(dims, "B")));
      case Scenario::mdi: return build(MDIAssemblage(al[0], al[1], al[2], dim_field(dims, "B_in")));
      case Scenario::channel:
        return build(ChannelAssemblage(al[0], al[1], dim_field(dims, "B_out"), dim_field(dims, "B_in")));
    }
  } catch (const InvalidArgumentError& e) {
    fail(e.what());
  }
  fail("unknown scenario");
}

Json functional_to_json(const EPRFunctional& f) {
  Json out = Json::object();
  out["scenario"] = to_string(f.scenario);
  out["form"] = "epr";
  out["alphabets"] = family_alphabets(f.scenario, f.operators.alphabets());
  Json dims = Json::object();
  if (f.scenario == Scenario::channel) {
    dims["B_out"] = 2;
    dims["B_in"] = f.operators.dim() / 2;
  } else {
    dims["B"] = f.operators.dim();
  }
  out["dims"] = dims;
  out["operators"] = elements_to_json(f.operators);
  out["bounds"] = bounds_to_json(f.bounds);
  return out;
}

Json functional_to_json(const BellCoefficients& xi) {
  Json out = Json::object();
  out["scenario"] = to_string(xi.scenario);
  out["form"] = "bell";
  out["qubits"] = xi.qubits;
  Json c = Json::object();
  for (const auto& [k, v] : xi.coefficients) c[key_to_string(k)] = v;
  out["coefficients"] = c;
  return out;
}

AnyFunctional functional_from_json(const Json& j) {
  const Scenario s = read_scenario(j);
  if (s == Scenario::standard) fail("functionals are defined for the bwi, mdi and channel scenarios");
  const Json& form = field(j, "form");
  if (form == "bell") {
    BellCoefficients xi;
    xi.scenario = s;
    xi.qubits = integer(field(j, "qubits"), "qubits");
    const Json& c = field(j, "coefficients");
    if (!c.is_object()) fail("'coefficients' must be an object");
    const size_t arity = s == Scenario::channel ? 6 : 3 + 2 * static_cast<size_t>(xi.qubits);
    for (const auto& [k, v] : c.items()) {
      Key key;
      try {
        key = key_from_string(k);
      } catch (const InvalidArgumentError& e) {
        fail(e.what());
      }
      if (key.size() != arity) fail("coefficient key '" + k + "' has wrong arity");
      xi.coefficients[key] = number(v, "coefficient " + k);
    }
    return xi;
  }
  if (form != "epr") fail("'form' must be \"epr\" or \"bell\"");
  EPRFunctional f;
  f.scenario = s;
  const auto al = read_alphabets(s, field(j, "alphabets"));
  const Json& dims = field(j, "dims");
  try {
    const int dim = s == Scenario::channel ? dim_field(dims, "B_out") * dim_field(dims, "B_in") : dim_field(dims, "B");
    f.operators = IndexedOperators(al, dim);
  } catch (const InvalidArgumentError& e) {
    fail(e.what());
  }
  read_elements(f.operators, field(j, "operators"));
  if (j.contains("bounds")) f.bounds = bounds_from_json(j.at("bounds"));
  return f;
}

Json correlations_to_json(const CorrelationTable& t) {
  Json out = Json::object();
  out["scenario"] = to_string(t.scenario);
  out["qubits"] = t.qubits;
  out["diagnostic"] = t.diagnostic;
  Json slice = Json::object();
  for (const auto& [k, v] : t.slice) slice[slice_key_to_string(k)] = v;
  out["slice"] = slice;
  Json st = Json::object();
  for (const auto& [name, marg] : t.selftest) {
    Json m = Json::object();
    for (const auto& [k, v] : marg) m[key_to_string(k)] = v;
    st[name] = m;
  }
  out["selftest"] = st;
  return out;
}

CorrelationTable correlations_from_json(const Json& j) {
  CorrelationTable t;
  t.scenario = read_scenario(j);
  if (j.contains("qubits")) t.qubits = integer(j.at("qubits"), "qubits");
  if (j.contains("diagnostic")) {
    if (!j.at("diagnostic").is_boolean()) fail("'diagnostic' must be a boolean");
    t.diagnostic = j.at("diagnostic").get<bool>();
  }
  const Json& slice = field(j, "slice");
  if (!slice.is_object()) fail("'slice' must be an object");
  try {
    for (const auto& [k, v] : slice.items()) t.slice[slice_key_from_string(k)] = number(v, "probability " + k);
    if (j.contains("selftest")) {
      const Json& st = j.at("selftest");
      if (!st.is_object()) fail("'selftest' must be an object");
      for (const auto& [name, m] : st.items()) {
        if (!m.is_object()) fail("self-test marginal must be an object");
        Marginal marg;
        for (const auto& [k, v] : m.items()) {
          const Key key = key_from_string(k);
          if (key.size() != 4) fail("self-test key '" + k + "' must be b,c,z,w");
          marg[key] = number(v, "probability " + k);
        }
        t.selftest[name] = marg;
      }
    }
  } catch (const InvalidArgumentError& e) {
    fail(e.what());
  }
  return t;
}

Json validation_to_json(const ValidationReport& r) {
  Json out = Json::object();
  out["scenario"] = to_string(r.scenario);
  out["passed"] = r.passed();
  out["tolerance"] = r.tolerance;
  out["structural_errors"] = r.structural_errors;
  Json conds = Json::array();
  for (const auto& c : r.conditions) {
    conds.push_back(Json{{"name", c.name}, {"description", c.description}, {"residual", c.residual}, {"passed", c.passed}});
  }
  out["conditions"] = conds;
  return out;
}

Json realisation_to_json(const QuantumRealisation& qr) {
  Json out = Json::object();
  out["alice_dim"] = qr.alice_dim;
  out["bob_dim"] = qr.bob_dim;
  out["state"] = operator_to_json(qr.state);
  Json povms = Json::object();
  for (int x : qr.x.labels()) {
    Json fam = Json::object();
    for (int a : qr.a.labels()) fam[std::to_string(a)] = operator_to_json(qr.povm(x, a));
    povms[std::to_string(x)] = fam;
  }
  out["povms"] = povms;
  Json channels = Json::array();
  for (const auto& ch : qr.bob_channels) {
    Json kraus = Json::array();
    for (const auto& k : ch.kraus_ops()) kraus.push_back(matrix_to_json(k));
    channels.push_back(kraus);
  }
  out["bob_channels"] = channels;
  return out;
}

Json bound_report_to_json(const BoundReport& r) {
  Json out = Json::object();
  out["kind"] = to_string(r.kind);
  out["value"] = r.value;
  out["tight"] = r.tight;
  out["note"] = r.note;
  if (r.kind == BoundKind::classical) out["strategies_enumerated"] = r.strategies;
  if (r.kind == BoundKind::seesaw) {
    out["restarts"] = r.restarts;
    out["iterations"] = r.iterations;
  }
  if (r.strategy) out["witness"] = Json{{"strategy", r.strategy->response}};
  if (r.realisation) out["witness"] = Json{{"realisation", realisation_to_json(*r.realisation)}};
  return out;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

std::string dump_json(const Json& j) { return j.dump(2); }

}  // namespace eprkit
