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

#include "eprkit/protocol.hpp"

#include <cmath>
#include <string>

#include "eprkit/catalog.hpp"

namespace eprkit {

namespace {

std::vector<std::vector<int>> strings(int n, int base, int offset) {
  int total = 1;
  for (int i = 0; i < n; ++i) total *= base;
  std::vector<std::vector<int>> out;
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

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

ResourceAssemblage::ResourceAssemblage(int qubits, double r) : qubits_(qubits), r_(r) {
  if (qubits < 1 || qubits > 2) throw InvalidArgumentError("resource qubit count must be 1 or 2");
  if (!(r >= 0.0 && r <= 1.0)) throw InvalidArgumentError("mixing parameter r must lie in [0, 1]");
}

HermitianOperator ResourceAssemblage::element(const std::vector<int>& c, const std::vector<int>& w) const {
  if (static_cast<int>(c.size()) != qubits_ || static_cast<int>(w.size()) != qubits_) {
    throw InvalidArgumentError("resource label length differs from the qubit count");
  }
  HermitianOperator ideal = resource_state(c[0], w[0]);
  for (int i = 1; i < qubits_; ++i) ideal = tensor(ideal, resource_state(c[i], w[i]));
  return r_ * ideal + (1.0 - r_) * ideal.transpose();
}

std::vector<std::vector<int>> ResourceAssemblage::outcome_strings() const { return strings(qubits_, 2, 0); }
std::vector<std::vector<int>> ResourceAssemblage::setting_strings() const { return strings(qubits_, 3, 1); }

StandardAssemblage ResourceAssemblage::as_standard() const {
  int settings = 1;
  for (int i = 0; i < qubits_; ++i) settings *= 3;
  StandardAssemblage out(Alphabet{0, dim()}, Alphabet{1, settings}, dim());
  for (const auto& c : outcome_strings())
    for (const auto& w : setting_strings()) {
      int ci = 0, wi = 0;
      for (int i = 0; i < qubits_; ++i) {
        ci = 2 * ci + c[i];
        wi = 3 * wi + (w[i] - 1);
      }
      out.set({ci, wi + 1}, element(c, w));
    }
  return out;
}

ResourceAssemblage make_resource(int qubits, double r) { return ResourceAssemblage(qubits, r); }

void check_povm_element(const HermitianOperator& m) {
  const auto eig = eig_hermitian(m);
  if (eig.values.front() < -kPovmTolerance || eig.values.back() > 1.0 + kPovmTolerance) {
    throw InvalidPovmElementError("measurement element has spectrum [" + std::to_string(eig.values.front()) + ", " +
                                  std::to_string(eig.values.back()) + "], outside [0, 1]");
  }
}

CorrelationTable simulate_bwi(const BwIAssemblage& a, const ResourceAssemblage& res, const HermitianOperator& m) {
  if (a.dim() != res.dim()) throw DimensionError("assemblage and resource dimensions differ");
  if (m.dim() != a.dim() * res.dim()) throw DimensionError("measurement element must act on Bob's system and the resource");
  check_povm_element(m);
  const auto missing = a.missing_keys();
  if (!missing.empty()) throw MissingEntryError("assemblage lacks element " + key_to_string(missing.front()));

  CorrelationTable t;
  t.scenario = Scenario::bwi;
  t.qubits = res.qubits();
  for (const auto& c : res.outcome_strings())
    for (const auto& w : res.setting_strings()) {
      const HermitianOperator s = res.element(c, w);
      for (const auto& [key, sigma] : a.elements()) {
        const double p = trace_product(m, tensor(sigma, s));
        t.slice[SliceKey{concat({key[0], 0}, c), concat({key[1], key[2], kStar}, w)}] = p;
      }
    }
  if (res.qubits() == 1) t.selftest["C"] = canonical_selftest_marginal(res.r());
  return t;
}

CorrelationTable simulate_mdi(const MDIAssemblage& a, const ResourceAssemblage& res) {
  if (a.dim() != res.dim()) throw DimensionError("Choi input dimension differs from the resource dimension");
  const auto missing = a.missing_keys();
  if (!missing.empty()) throw MissingEntryError("assemblage lacks element " + key_to_string(missing.front()));

  CorrelationTable t;
  t.scenario = Scenario::mdi;
  t.qubits = res.qubits();
  for (const auto& c : res.outcome_strings())
    for (const auto& z : res.setting_strings()) {
      const HermitianOperator s = res.element(c, z);
      for (const auto& [key, j] : a.elements()) {
        const double p = apply_choi(j, s).trace();
        t.slice[SliceKey{concat({key[0], key[1]}, c), concat({key[2], kStar}, z)}] = p;
      }
    }
  if (res.qubits() == 1) t.selftest["C"] = canonical_selftest_marginal(res.r());
  return t;
}

CorrelationTable simulate_channel(const ChannelAssemblage& a, const ResourceAssemblage& res_in,
                                  const ResourceAssemblage& res_out, const HermitianOperator& m, MixingMode mode) {
  if (res_in.qubits() != 1 || res_out.qubits() != 1) throw InvalidArgumentError("channel protocol uses one-qubit resources");
  if (a.in_dim() != 2 || a.out_dim() != 2) throw DimensionError("channel protocol expects qubit input and output");
  if (mode == MixingMode::joint && res_in.r() != res_out.r()) {
    throw InvalidArgumentError("aligned resources must share the mixing parameter (got " + std::to_string(res_in.r()) +
                               " and " + std::to_string(res_out.r()) + ")");
  }
  if (m.dim() != 4) throw DimensionError("measurement element must act on B_out and the resource");
  check_povm_element(m);
  const auto missing = a.missing_keys();
  if (!missing.empty()) throw MissingEntryError("assemblage lacks element " + key_to_string(missing.front()));

  CorrelationTable t;
  t.scenario = Scenario::channel;
  t.qubits = 1;
  t.diagnostic = mode == MixingMode::independent_diagnostic;
  for (int c = 0; c < 2; ++c)
    for (int w = 1; w <= 3; ++w) {
      const HermitianOperator in = res_in.element({c}, {w});
      for (const auto& [key, j] : a.elements()) {
        const HermitianOperator out = apply_choi(j, in);
        for (int d = 0; d < 2; ++d)
          for (int u = 1; u <= 3; ++u) {
            const double p = trace_product(m, tensor(out, res_out.element({d}, {u})));
            t.slice[SliceKey{{key[0], 0, c, d}, {key[1], kStar, kStar, w, u}}] = p;
          }
      }
    }
  t.selftest["C"] = canonical_selftest_marginal(res_in.r());
  t.selftest["D"] = canonical_selftest_marginal(res_out.r());
  return t;
}

Marginal selftest_marginal(const CorrelationTable& p, const std::string& name) {
  auto it = p.selftest.find(name);
  if (it == p.selftest.end()) throw MissingEntryError("table has no self-test marginal '" + name + "'");
  Marginal out;
  for (int z = 1; z <= 4; ++z)
    for (int w = 1; w <= 3; ++w) {
      double mass = 0.0;
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c) {
          auto e = it->second.find({b, c, z, w});
          if (e == it->second.end()) {
            throw MissingEntryError("self-test marginal lacks setting pair z=" + std::to_string(z) + ", w=" + std::to_string(w));
          }
          mass += e->second;
        }
      if (!(mass > 0.0)) throw MissingEntryError("self-test marginal has no weight at z=" + std::to_string(z) + ", w=" + std::to_string(w));
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c) out[{b, c, z, w}] = it->second.at({b, c, z, w}) / mass;
    }
  return out;
}

RSweepResult r_sweep(const Assemblage& a, const BellCoefficients& xi, const std::vector<double>& rs) {
  RSweepResult result;
  result.r = rs;
  for (double r : rs) {
    CorrelationTable t;
    if (const auto* bwi = std::get_if<BwIAssemblage>(&a)) {
      const int n = qubits_of_dim(bwi->dim());
      t = simulate_bwi(*bwi, make_resource(n, r), phi_plus_projector(n));
    } else if (const auto* mdi = std::get_if<MDIAssemblage>(&a)) {
      t = simulate_mdi(*mdi, make_resource(qubits_of_dim(mdi->dim()), r));
    } else if (const auto* ch = std::get_if<ChannelAssemblage>(&a)) {
      t = simulate_channel(*ch, make_resource(1, r), make_resource(1, r), phi_plus_projector(1));
    } else {
      throw ScenarioMismatchError("the standard scenario has no activation protocol");
    }
    result.values.push_back(evaluate_bell(xi, t));
  }
  if (rs.size() >= 3 && rs.back() != rs.front()) {
    const double slope = (result.values.back() - result.values.front()) / (rs.back() - rs.front());
    for (size_t i = 0; i < rs.size(); ++i) {
      const double line = result.values.front() + slope * (rs[i] - rs.front());
      result.affine_residual = std::max(result.affine_residual, std::abs(result.values[i] - line));
    }
  }
  return result;
}

}  // namespace eprkit
