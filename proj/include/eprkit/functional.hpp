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

// EPR functionals (operator form), Bell functionals (coefficient form) and
// the projector-basis construction linking them.

#include <map>
#include <optional>

#include "eprkit/assemblage.hpp"
#include "eprkit/correlations.hpp"

namespace eprkit {

struct BoundConstants {
  std::optional<double> classical;
  std::optional<double> quantum_lower;
  std::optional<double> quantum_upper;
  std::optional<double> no_signalling;
  std::optional<double> almost_quantum;
};

/// Operators keyed (a, x, y) for BwI, (a, b, x) for MDI and (a, x) for the
/// channel scenario, where they act on B_out ⊗ B_in.
struct EPRFunctional {
  Scenario scenario = Scenario::bwi;
  IndexedOperators operators;
  BoundConstants bounds;
};

/// Coefficients over projector labels, keyed (c_1..c_n, w_1..w_n).
using PauliTable = std::map<Key, double>;

/// Expansion of a 2^n-dimensional operator over products of π_{c|w}.
/// A single qubit F = a0 I + Σ_w b_w P_w maps to ξ_{0w} = a0/3 + b_w, ξ_{1w} = a0/3 − b_w;
/// several qubits use the same rule factorwise on the Pauli-string expansion.
PauliTable decompose(const HermitianOperator& f, int qubits);
HermitianOperator reconstruct(const PauliTable& table, int qubits);

/// Coefficient layout per scenario:
///   BwI      (a, x, y, c_1..c_n, w_1..w_n)
///   MDI      (a, b, x, c_1..c_n, z_1..z_n)
///   channel  (a, x, c, d, w, u)  with d, u labelling the B_out factor
struct BellCoefficients {
  Scenario scenario = Scenario::bwi;
  int qubits = 1;
  std::map<Key, double> coefficients;
};

double evaluate_epr(const EPRFunctional& f, const Assemblage& a);

/// Σ ξ p over the designated slice. Throws MissingEntryError on gaps.
double evaluate_bell(const BellCoefficients& xi, const CorrelationTable& p);

BellCoefficients bell_from_epr(const EPRFunctional& f);

/// Ratio between the Bell value on canonical protocol data and the EPR value:
/// 4^{-n} for BwI, 1 for MDI, 1/4 for the channel scenario.
double bell_factor(Scenario s, int qubits);

/// Slice entry read by coefficient `key` of a table of this layout.
SliceKey slice_key_for(Scenario s, int qubits, const Key& key);

/// Number of qubits of an operator dimension (throws for non powers of two).
int qubits_of_dim(int dim);

}  // namespace eprkit
