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

// Bounds on BwI functionals: exhaustive classical minimum, a no-signalling
// lower-bound certificate, and a seesaw search for quantum feasible values.

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "eprkit/functional.hpp"
#include "eprkit/realisation.hpp"

namespace eprkit {

enum class BoundKind { classical, ns_certificate, seesaw };
std::string to_string(BoundKind k);

/// Deterministic response f : X → A, stored as response[x - x.first].
struct DeterministicStrategy {
  std::vector<int> response;
};

struct BoundReport {
  BoundKind kind = BoundKind::classical;
  double value = 0.0;
  std::optional<DeterministicStrategy> strategy;
  std::optional<QuantumRealisation> realisation;
  bool tight = false;  // true when the value is known to be attained
  std::string note;
  long long strategies = 0;
  int restarts = 0;
  int iterations = 0;  // iterations of the best seesaw run
  std::vector<std::vector<double>> histories;  // seesaw value after every iteration, per restart
};

inline constexpr double kEnumerationGuard = 1e6;

/// Σ_y λ_min(Σ_x F_{f(x),x,y}) for one strategy.
double strategy_value(const EPRFunctional& f, const DeterministicStrategy& s);

BoundReport classical_bound(const EPRFunctional& f);
BoundReport ns_lower_bound(const EPRFunctional& f);

struct SeesawOptions {
  std::uint64_t seed = 0;
  int restarts = 50;
  int max_iterations = 500;
  double relative_tolerance = 1e-10;
};

/// Alternating minimisation over a shared state and Alice's projective
/// measurements, with Bob's channels fixed to the identity. Alice's system has
/// Bob's dimension. Requires two outcomes for Alice.
BoundReport seesaw_quantum(const EPRFunctional& f, const SeesawOptions& options = {});

/// Sign of ⟨C_w B_z⟩ in the self-test expression, indexed [w - 1][z - 1].
inline constexpr std::array<std::array<int, 4>, 3> kSelfTestSigns{{
    {{+1, +1, -1, -1}},
    {{+1, -1, +1, -1}},
    {{+1, -1, -1, +1}},
}};

/// Σ_{b,c} (−1)^{b+c} p(b, c | z, w).
double correlator(const Marginal& p, int z, int w);

/// Signed sum of the twelve correlators; 4√3 for the ideal strategy.
double selftest_value(const Marginal& p);

}  // namespace eprkit
