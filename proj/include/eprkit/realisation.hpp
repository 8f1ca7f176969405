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

// Quantum realisations: a shared state, Alice's POVMs and Bob's scenario
// specific processing, plus seeded random instances.

#include <cstdint>
#include <optional>

#include "eprkit/assemblage.hpp"
#include "eprkit/random.hpp"

namespace eprkit {

/// Kraus map with a classical outcome attached to every Kraus operator.
struct MeasurementChannel {
  KrausMap kraus;
  std::vector<int> outcome_of;  // outcome label (0-based) of each Kraus operator
  int outcomes = 0;

  /// Effect Σ_{k : outcome_of[k] = b} A_k† A_k on the input space.
  Matrix effect(int b) const;
};

struct QuantumRealisation {
  HermitianOperator state;  // on A ⊗ B
  int alice_dim = 0;
  int bob_dim = 0;
  Alphabet a;
  Alphabet x;
  std::vector<std::vector<HermitianOperator>> povms;  // povms[x - x.first][a - a.first]

  // Bob with input: one channel B -> B per input label y.
  Alphabet y;
  std::vector<KrausMap> bob_channels;

  // MDI: measurement channel on B ⊗ B_in with outcomes labelled from b.first.
  Alphabet b;
  std::optional<MeasurementChannel> bob_measurement;

  // Channel scenario: B ⊗ B_in -> B_out.
  std::optional<KrausMap> bob_process;

  int bob_in_dim = 2;

  const HermitianOperator& povm(int x_label, int a_label) const;

  /// Bob's conditional state tr_A[(M_{a|x} ⊗ I) ρ].
  HermitianOperator steered(int a_label, int x_label) const;

  /// Throws InvalidRealisationError when the state, POVMs or maps are not valid.
  void check(double tolerance = 1e-10) const;
};

BwIAssemblage realize_bwi(const QuantumRealisation& qr);
MDIAssemblage realize_mdi(const QuantumRealisation& qr);
ChannelAssemblage realize_channel(const QuantumRealisation& qr);

/// Choi operator of the linear map `action` from in_dim to out_dim, built on the matrix-unit basis.
template <class Action>
HermitianOperator choi_from_action(int in_dim, int out_dim, Action action) {
  Matrix j = Matrix::Zero(out_dim * in_dim, out_dim * in_dim);
  for (int r = 0; r < in_dim; ++r)
    for (int c = 0; c < in_dim; ++c) {
      Matrix unit = Matrix::Zero(in_dim, in_dim);
      unit(r, c) = 1.0;
      Matrix image = action(unit);
      Matrix ketbra = Matrix::Zero(in_dim, in_dim);
      ketbra(r, c) = 1.0;
      j += kron(image, ketbra);
    }
  return HermitianOperator::hermitian_part(j / static_cast<double>(in_dim));
}

/// Label sets for random instances. Defaults match the PTP example.
struct ScenarioAlphabets {
  Alphabet a{0, 2};
  Alphabet x{1, 3};
  Alphabet y{0, 2};
  Alphabet b{0, 2};
};

struct RandomInstance {
  Assemblage assemblage;
  QuantumRealisation realisation;
};

/// Deterministic random quantum assemblage. `qubits` sets Bob's dimension 2^qubits (BwI only).
RandomInstance random_quantum(Scenario scenario, std::uint64_t seed, const ScenarioAlphabets& alphabets = {},
                              int qubits = 1);

/// Random projective POVM with `outcomes` elements on `dim`.
std::vector<HermitianOperator> random_projective_povm(Rng& rng, int dim, int outcomes);

/// Realisation producing the transposed BwI assemblage: transposed POVMs and state, dual channels.
QuantumRealisation transposed_realisation(const QuantumRealisation& qr);

}  // namespace eprkit
