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

// Named objects of the post-quantumness activation example: the PTP
// assemblage and functionals, the canonical self-test strategy, the MDI
// controlled-transpose example and a channel embedding of the PTP example.

#include <array>
#include <cmath>
#include <utility>

#include "eprkit/assemblage.hpp"
#include "eprkit/correlations.hpp"
#include "eprkit/functional.hpp"

namespace eprkit {

struct PtpConstants {
  static constexpr double classical = 1.2679;
  static constexpr double almost_quantum = 0.4135;
  static constexpr double no_signalling = 0.0;
  static double exact_classical() { return 3.0 - std::sqrt(3.0); }
};

/// Sign exponent of the PTP assemblage: a + δ_{x,2}·δ_{y,1} (product) or a + δ_{x,2} + δ_{y,1} (additive).
enum class PtpConvention { product, additive };

/// σ_{a|xy} with a, y ∈ {0, 1} and x ∈ {1, 2, 3} selecting X, Y, Z.
BwIAssemblage ptp_assemblage(PtpConvention convention = PtpConvention::product);

/// F_{axy} = (I − (−1)^a P_x)^{T^y} / 2, optionally shifted by −β^AQ/6 · I.
EPRFunctional ptp_functional(bool normalized, double almost_quantum = PtpConstants::almost_quantum);

/// Two-qubit functional F̃ ⊗ I + I ⊗ F̃ built from the normalized PTP operators.
/// Non-negative on quantum assemblages because each term sees a reduced qubit assemblage.
EPRFunctional ptp_two_qubit_functional(double almost_quantum = PtpConstants::almost_quantum);

/// MDI functional reading p(ab|x, y) = 2 tr[J_{ab|x} π_{y|1}] through basis inputs y ∈ {0, 1}
/// and scoring 2√2 − CHSH over x ∈ {1, 2} (x = 3 carries zero weight).
/// Tsirelson's bound makes it non-negative on quantum MDI assemblages.
EPRFunctional chsh_mdi_functional();

/// Closed-form coefficients ξ^{axy}_{cw} = δ_{c, a⊕1⊕y·δ_{x,2}} δ_{w, (x mod 3)+1} − δ_{w,1} β^AQ/6.
BellCoefficients ptp_bell_coefficients(double almost_quantum = PtpConstants::almost_quantum);

/// Ideal resource element σ̃_{c|w}: (I ± Z)/4, (I ± X)/4, (I ∓ Y)/4.
HermitianOperator resource_state(int c, int w);

/// Effect M̃_{c|w} = (I + (−1)^c P_w)/2 used against Choi data.
HermitianOperator resource_effect(int c, int w);

/// Bob's self-test observable B_z, z ∈ {1, 2, 3, 4}.
HermitianOperator selftest_observable(int z);

struct SelfTestStrategy {
  StandardAssemblage states;  // σ̃_{c|w}
  std::array<HermitianOperator, 4> observables;
};

SelfTestStrategy canonical_selftest_strategy();

/// p(b, c | z, w) of the canonical strategy on the r-mixed resource.
Marginal canonical_selftest_marginal(double r);

/// N_0 = (I + Y)/3, N_1 = 2I/3 − Y/3.
HermitianOperator mdi_ptp_effect(int b);

enum class MdiPtpForm { transposed_measurement, direct };

/// p(ab|xy) keyed a,b|x,y for basis-state control inputs y ∈ {0, 1}.
CorrelationTable mdi_ptp_probabilities(MdiPtpForm form = MdiPtpForm::transposed_measurement);

/// Choi data of the MDI example with the control qubit decohered in the Z basis:
/// J(N_{ab|x}) = ½ Σ_y p(ab|xy) π_{y|1}.
MDIAssemblage mdi_ptp_assemblage();

/// J(I_{a|x}) = ½ Σ_y σ_{a|xy} ⊗ π_{y|1}; needs a qubit BwI assemblage with |Y| = 2.
ChannelAssemblage embed_bwi_in_channel(const BwIAssemblage& a);

/// F_{ax} = 2 Σ_y F_{axy} ⊗ π_{y|1}.
EPRFunctional embed_bwi_functional(const EPRFunctional& f);

/// Embedded PTP assemblage paired with the embedded normalized functional.
std::pair<ChannelAssemblage, EPRFunctional> embedded_ptp_channel();

}  // namespace eprkit
