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

#include "eprkit/functional.hpp"

#include <array>
#include <cmath>

namespace eprkit {

int qubits_of_dim(int dim) { return log2_exact(dim); }

namespace {

// Pauli string index s_i ∈ {0, 1, 2, 3} ↦ I, Z, X, Y.
Matrix pauli_by_index(int s) {
  switch (s) {
    case 0: return pauli_i();
    case 1: return pauli_z();
    case 2: return pauli_x();
    default: return pauli_y();
  }
}

Matrix pauli_string(const std::vector<int>& s) {
  Matrix m = Matrix::Identity(1, 1);
  for (int si : s) m = kron(m, pauli_by_index(si));
  return m;
}

// Per-factor coefficient of π_{c|w} in the canonical expansion of the Pauli with index s.
double factor_weight(int s, int c, int w) {
  if (s == 0) return 1.0 / 3.0;
  if (s != w) return 0.0;
  return c == 0 ? 1.0 : -1.0;
}

std::vector<std::vector<int>> all_strings(int n, int base, int offset) {
  std::vector<std::vector<int>> out;
  int total = 1;
  for (int i = 0; i < n; ++i) total *= base;
  for (int idx = 0; idx < total; ++idx) {
    std::vector<int> s(n);
    int rest = idx;
    for (int i = n - 1; i >= 0; --i) {
      s[i] = rest % base + offset;
      rest /= base;
    }
    out.push_back(s);
  }
  return out;
}

std::vector<Key> projector_labels(int n) {
  std::vector<Key> out;
  for (const auto& c : all_strings(n, 2, 0))
    for (const auto& w : all_strings(n, 3, 1)) {
      Key k = c;
      k.insert(k.end(), w.begin(), w.end());
      out.push_back(k);
    }
  return out;
}

void check_qubits(int qubits) {
  if (qubits < 1 || (1 << qubits) > kMaxOperatorDim) {
    throw DimensionError("unsupported qubit count " + std::to_string(qubits));
  }
}

}  // namespace

PauliTable decompose(const HermitianOperator& f, int qubits) {
  check_qubits(qubits);
  if (f.dim() != (1 << qubits)) {
    throw DimensionError("operator of dimension " + std::to_string(f.dim()) + " is not on " +
                         std::to_string(qubits) + " qubits");
  }
  const double norm = 1.0 / static_cast<double>(f.dim());
  std::vector<std::pair<std::vector<int>, double>> expansion;
  for (const auto& s : all_strings(qubits, 4, 0)) {
    const double coef = (pauli_string(s) * f.matrix()).trace().real() * norm;
    if (coef != 0.0) expansion.emplace_back(s, coef);
  }
  PauliTable table;
  for (const Key& label : projector_labels(qubits)) {
    double value = 0.0;
    for (const auto& [s, coef] : expansion) {
      double w = coef;
      for (int i = 0; i < qubits && w != 0.0; ++i) w *= factor_weight(s[i], label[i], label[qubits + i]);
      value += w;
    }
    table[label] = value;
  }
  return table;
}

HermitianOperator reconstruct(const PauliTable& table, int qubits) {
  check_qubits(qubits);
  Matrix m = Matrix::Zero(1 << qubits, 1 << qubits);
  for (const Key& label : projector_labels(qubits)) {
    auto it = table.find(label);
    if (it == table.end()) throw MissingEntryError("missing projector label " + key_to_string(label));
    Matrix p = Matrix::Identity(1, 1);
    for (int i = 0; i < qubits; ++i) p = kron(p, pauli_projector(label[i], label[qubits + i]).matrix());
    m += it->second * p;
  }
  return HermitianOperator::hermitian_part(m);
}

double evaluate_epr(const EPRFunctional& f, const Assemblage& a) {
  if (scenario_of(a) != f.scenario) {
    throw ScenarioMismatchError("functional is for scenario " + to_string(f.scenario) + " but the assemblage is " +
                                to_string(scenario_of(a)));
  }
  return std::visit(
      [&](const auto& as) {
        if (as.alphabets() != f.operators.alphabets()) throw ScenarioMismatchError("functional and assemblage alphabets differ");
        if (as.dim() != f.operators.dim()) throw DimensionError("functional and assemblage dimensions differ");
        double total = 0.0;
        for (const auto& [key, op] : f.operators.elements()) total += trace_product(op, as.at(key));
        return total;
      },
      a);
}

static int bell_qubits(const EPRFunctional& f) {
  const int q = qubits_of_dim(f.operators.dim());
  if (f.scenario == Scenario::channel) {
    if (q != 2) throw DimensionError("channel functionals act on one output and one input qubit");
    return 1;
  }
  return q;
}

SliceKey slice_key_for(Scenario s, int n, const Key& key) {
  auto tail = [&](size_t from, size_t count) { return std::vector<int>(key.begin() + from, key.begin() + from + count); };
  switch (s) {
    case Scenario::bwi: {
      if (key.size() != 3 + 2 * static_cast<size_t>(n)) throw InvalidArgumentError("BwI coefficient key has wrong arity");
      SliceKey k{{key[0], 0}, {key[1], key[2], kStar}};
      const auto c = tail(3, n), w = tail(3 + n, n);
      k.outcomes.insert(k.outcomes.end(), c.begin(), c.end());
      k.settings.insert(k.settings.end(), w.begin(), w.end());
      return k;
    }
    case Scenario::mdi: {
      if (key.size() != 3 + 2 * static_cast<size_t>(n)) throw InvalidArgumentError("MDI coefficient key has wrong arity");
      SliceKey k{{key[0], key[1]}, {key[2], kStar}};
      const auto c = tail(3, n), z = tail(3 + n, n);
      k.outcomes.insert(k.outcomes.end(), c.begin(), c.end());
      k.settings.insert(k.settings.end(), z.begin(), z.end());
      return k;
    }
    case Scenario::channel: {
      if (key.size() != 6) throw InvalidArgumentError("channel coefficient key has wrong arity");
      return SliceKey{{key[0], 0, key[2], key[3]}, {key[1], kStar, kStar, key[4], key[5]}};
    }
    case Scenario::standard: break;
  }
  throw ScenarioMismatchError("the standard scenario has no Bell functional");
}

double evaluate_bell(const BellCoefficients& xi, const CorrelationTable& p) {
  if (xi.scenario != p.scenario) {
    throw ScenarioMismatchError("coefficients are for scenario " + to_string(xi.scenario) + " but the table is " +
                                to_string(p.scenario));
  }
  if (xi.qubits != p.qubits) throw ScenarioMismatchError("coefficient and table qubit counts differ");
  double total = 0.0;
  for (const auto& [key, value] : xi.coefficients) total += value * p.at(slice_key_for(xi.scenario, xi.qubits, key));
  return total;
}

BellCoefficients bell_from_epr(const EPRFunctional& f) {
  BellCoefficients out;
  out.scenario = f.scenario;
  out.qubits = bell_qubits(f);
  if (f.scenario == Scenario::standard) throw ScenarioMismatchError("the standard scenario has no Bell functional");
  for (const auto& [key, op] : f.operators.elements()) {
    const int n = qubits_of_dim(op.dim());
    for (const auto& [label, value] : decompose(op, n)) {
      Key k = key;
      if (f.scenario == Scenario::channel) {
        // label = (d, c, u, w) with the output factor first
        k.insert(k.end(), {label[1], label[0], label[3], label[2]});
      } else {
        k.insert(k.end(), label.begin(), label.end());
      }
      out.coefficients[k] = value;
    }
  }
  return out;
}

double bell_factor(Scenario s, int qubits) {
  switch (s) {
    case Scenario::bwi: return std::pow(0.25, qubits);
    case Scenario::mdi: return 1.0;
    case Scenario::channel: return 0.25;
    case Scenario::standard: break;
  }
  throw ScenarioMismatchError("the standard scenario has no Bell functional");
}

}  // namespace eprkit
