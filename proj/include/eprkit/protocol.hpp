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

#pragma once

// Simulation of the activation protocols: resource preparation, Bob's joint
// measurement and the designated correlation slice.

#include <optional>
#include <vector>

#include "eprkit/assemblage.hpp"
#include "eprkit/correlations.hpp"
#include "eprkit/functional.hpp"

namespace eprkit {

/// σ^(r)_{c⃗|w⃗} = r ⊗σ̃_{c_i|w_i} + (1 − r)(⊗σ̃_{c_i|w_i})ᵀ on `qubits` qubits.
class ResourceAssemblage {
 public:
  ResourceAssemblage(int qubits, double r);

  int qubits() const { return qubits_; }
  int dim() const { return 1 << qubits_; }
  double r() const { return r_; }

  HermitianOperator element(const std::vector<int>& c, const std::vector<int>& w) const;

  /// Flattened standard assemblage: c = Σ c_i 2^{n−1−i}, w = 1 + Σ (w_i − 1) 3^{n−1−i}.
  StandardAssemblage as_standard() const;

  /// All outcome and setting strings (c⃗, w⃗).
  std::vector<std::vector<int>> outcome_strings() const;
  std::vector<std::vector<int>> setting_strings() const;

 private:
  int qubits_;
  double r_;
};

ResourceAssemblage make_resource(int qubits, double r);

inline constexpr double kPovmTolerance = 1e-10;

/// Throws InvalidPovmElementError unless 0 ≤ M ≤ I within kPovmTolerance.
void check_povm_element(const HermitianOperator& m);

CorrelationTable simulate_bwi(const BwIAssemblage& a, const ResourceAssemblage& res, const HermitianOperator& m);
CorrelationTable simulate_mdi(const MDIAssemblage& a, const ResourceAssemblage& res);

enum class MixingMode { joint, independent_diagnostic };

/// Joint mode requires equal r for both resources; the diagnostic mode accepts
/// any pair and marks the table as diagnostic.
CorrelationTable simulate_channel(const ChannelAssemblage& a, const ResourceAssemblage& res_in,
                                  const ResourceAssemblage& res_out, const HermitianOperator& m,
                                  MixingMode mode = MixingMode::joint);

/// Normalised p(b, c | z, w) from a table's self-test data ("C" or "D").
Marginal selftest_marginal(const CorrelationTable& p, const std::string& name = "C");

struct RSweepResult {
  std::vector<double> r;
  std::vector<double> values;
  double affine_residual = 0.0;  // largest deviation from the line through the end points
};

/// Bell values of the canonical protocol (|φⁿ⟩⟨φⁿ| for BwI and channel) at each r.
RSweepResult r_sweep(const Assemblage& a, const BellCoefficients& xi, const std::vector<double>& rs);

}  // namespace eprkit
