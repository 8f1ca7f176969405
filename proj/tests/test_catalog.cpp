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

#include <gtest/gtest.h>

#include <cmath>

#include "eprkit/bounds.hpp"
#include "eprkit/catalog.hpp"
#include "eprkit/protocol.hpp"
#include "eprkit/realisation.hpp"
#include "oracles.hpp"

using namespace eprkit;

TEST(Catalog, Constants) {
  EXPECT_EQ(PtpConstants::classical, 1.2679);
  EXPECT_EQ(PtpConstants::almost_quantum, 0.4135);
  EXPECT_EQ(PtpConstants::no_signalling, 0.0);
  EXPECT_NEAR(PtpConstants::exact_classical(), 1.2679491924311228, 1e-15);
  EXPECT_NEAR(PtpConstants::exact_classical(), PtpConstants::classical, 5e-5);
}

TEST(Catalog, PtpAssemblageSpotValues) {
  const auto a = ptp_assemblage();
  const oracle::Mat i = oracle::I2();
  EXPECT_LE(oracle::max_abs(a.at({0, 1, 0}).matrix() - (i + oracle::X()) / 4.0), 1e-16);
  EXPECT_LE(oracle::max_abs(a.at({0, 2, 0}).matrix() - (i + oracle::Y()) / 4.0), 1e-16);
  EXPECT_LE(oracle::max_abs(a.at({0, 2, 1}).matrix() - (i - oracle::Y()) / 4.0), 1e-16);
  EXPECT_LE(oracle::max_abs(a.at({0, 3, 1}).matrix() - (i + oracle::Z()) / 4.0), 1e-16);
  EXPECT_LE(oracle::max_abs(a.at({1, 1, 1}).matrix() - (i - oracle::X()) / 4.0), 1e-16);
  const auto add = ptp_assemblage(PtpConvention::additive);
  EXPECT_LE(oracle::max_abs(add.at({0, 1, 1}).matrix() - (i - oracle::X()) / 4.0), 1e-16);
  EXPECT_LE(oracle::max_abs(add.at({0, 2, 0}).matrix() - (i - oracle::Y()) / 4.0), 1e-16);
}

TEST(Catalog, EveryObjectPassesItsValidator) {
  EXPECT_TRUE(validate(ptp_assemblage()).passed());
  EXPECT_TRUE(validate(ptp_assemblage(PtpConvention::additive)).passed());
  EXPECT_TRUE(validate(canonical_selftest_strategy().states).passed());
  EXPECT_TRUE(validate(mdi_ptp_assemblage()).passed());
  EXPECT_TRUE(validate(embedded_ptp_channel().first).passed());
}

TEST(Catalog, RawFunctionalSaturatesNoSignallingBound) {
  EXPECT_NEAR(evaluate_epr(ptp_functional(false), ptp_assemblage()), 0.0, 1e-12);
  EXPECT_NEAR(ns_lower_bound(ptp_functional(false)).value, 0.0, 1e-12);
  // each F_{axy} annihilates σ_{a|xy}
  const auto f = ptp_functional(false);
  const auto a = ptp_assemblage();
  for (const auto& [k, op] : f.operators.elements()) {
    EXPECT_NEAR(oracle::trace_re(op.matrix() * a.at(k).matrix()), 0.0, 1e-15) << key_to_string(k);
  }
}

TEST(Catalog, ClassicalBoundOfRawFunctional) {
  EXPECT_NEAR(classical_bound(ptp_functional(false)).value, 3.0 - std::sqrt(3.0), 1e-10);
}

TEST(Catalog, NormalizedFunctionalMetadata) {
  const auto f = ptp_functional(true);
  EXPECT_NEAR(*f.bounds.classical, 1.2679 - 0.4135, 1e-15);
  EXPECT_EQ(*f.bounds.quantum_lower, 0.0);
  EXPECT_NEAR(*f.bounds.no_signalling, -0.4135, 1e-15);
  const auto raw = ptp_functional(false);
  EXPECT_EQ(*raw.bounds.quantum_lower, 0.4135);
  EXPECT_EQ(*raw.bounds.quantum_upper, 1.2679);
  for (const auto& [k, op] : f.operators.elements()) {
    EXPECT_LE(max_abs_diff(op, raw.operators.at(k) - (0.4135 / 6.0) * HermitianOperator::identity(2)), 1e-16);
  }
}

TEST(Catalog, BellCoefficientsClosedForm) {
  const auto xi = ptp_bell_coefficients();
  EXPECT_EQ(xi.coefficients.size(), 72u);
  for (int a = 0; a < 2; ++a)
    for (int x = 1; x <= 3; ++x)
      for (int y = 0; y < 2; ++y)
        for (int c = 0; c < 2; ++c)
          for (int w = 1; w <= 3; ++w) {
            const int target_c = (a + 1 + (x == 2 ? y : 0)) % 2;
            const int target_w = x % 3 + 1;
            const double expect = (c == target_c && w == target_w ? 1.0 : 0.0) - (w == 1 ? 0.4135 / 6.0 : 0.0);
            EXPECT_NEAR(xi.coefficients.at({a, x, y, c, w}), expect, 1e-16);
          }
}

// The closed form and the canonical split disagree entrywise; the difference
// lies in the kernel of the overcomplete projector expansion.
TEST(Catalog, BellCoefficientsDifferFromCanonicalSplitOnlyByKernel) {
  const auto closed = ptp_bell_coefficients();
  const auto canonical = bell_from_epr(ptp_functional(true));
  double largest = 0.0;
  for (int a = 0; a < 2; ++a)
    for (int x = 1; x <= 3; ++x)
      for (int y = 0; y < 2; ++y) {
        PauliTable diff;
        for (int c = 0; c < 2; ++c)
          for (int w = 1; w <= 3; ++w) {
            const Key k{a, x, y, c, w};
            diff[{c, w}] = closed.coefficients.at(k) - canonical.coefficients.at(k);
            largest = std::max(largest, std::abs(diff[{c, w}]));
          }
        EXPECT_LE(max_abs_diff(reconstruct(diff, 1), HermitianOperator::zero(2)), 1e-12);
      }
  EXPECT_GT(largest, 0.1);
}

TEST(Catalog, ResourceMatchesEffects) {
  for (int c = 0; c < 2; ++c)
    for (int w = 1; w <= 3; ++w) {
      EXPECT_LE(max_abs_diff(resource_state(c, w), 0.5 * resource_effect(c, w).transpose()), 1e-16);
    }
  EXPECT_THROW(resource_state(2, 1), InvalidArgumentError);
  EXPECT_THROW(resource_state(0, 4), InvalidArgumentError);
}

TEST(Catalog, SelfTestObservablesAreUnitarySignedSums) {
  for (int z = 1; z <= 4; ++z) {
    const auto b = selftest_observable(z);
    const auto eig = oracle::eigenvalues(b.matrix());
    EXPECT_NEAR(eig.front(), -1.0, 1e-14);
    EXPECT_NEAR(eig.back(), 1.0, 1e-14);
  }
  // the four observables sum to zero
  Matrix s = Matrix::Zero(2, 2);
  for (int z = 1; z <= 4; ++z) s += selftest_observable(z).matrix();
  EXPECT_LE(oracle::max_abs(s), 1e-15);
  EXPECT_THROW(selftest_observable(5), InvalidArgumentError);
}

TEST(Catalog, SelfTestValueIsFourRootThree) {
  EXPECT_NEAR(selftest_value(canonical_selftest_marginal(1.0)), 6.92820323, 1e-8);
  EXPECT_NEAR(selftest_value(canonical_selftest_marginal(1.0)), 4.0 * std::sqrt(3.0), 1e-9);
}

TEST(Catalog, MdiDualFormsAgree) {
  const auto t = mdi_ptp_probabilities(MdiPtpForm::transposed_measurement);
  const auto d = mdi_ptp_probabilities(MdiPtpForm::direct);
  ASSERT_EQ(t.slice.size(), d.slice.size());
  for (const auto& [k, v] : t.slice) EXPECT_NEAR(v, d.slice.at(k), 1e-12);
  EXPECT_NEAR(t.at(SliceKey{{0, 0}, {2, 0}}), 0.0, 1e-15);
  EXPECT_NEAR(t.at(SliceKey{{1, 0}, {2, 0}}), 1.0 / 3.0, 1e-15);
}

TEST(Catalog, MdiProbabilitiesByHand) {
  const oracle::Mat phi = oracle::phi_plus() * oracle::phi_plus().adjoint();
  const auto t = mdi_ptp_probabilities();
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int x = 1; x <= 3; ++x)
        for (int y = 0; y < 2; ++y) {
          const oracle::Mat p = x == 1 ? oracle::X() : x == 2 ? oracle::Y() : oracle::Z();
          const oracle::Mat m = (oracle::I2() + (a == 0 ? 1.0 : -1.0) * p) / 2.0;
          oracle::Mat n = b == 0 ? oracle::Mat((oracle::I2() + oracle::Y()) / 3.0)
                                 : oracle::Mat(2.0 * oracle::I2() / 3.0 - oracle::Y() / 3.0);
          // controlled transpose on Bob's qubit, applied to the state
          oracle::Mat state = y == 1 ? oracle::partial_transpose2(phi, 2, 2, 1) : phi;
          EXPECT_NEAR(t.at(SliceKey{{a, b}, {x, y}}), oracle::trace_re(oracle::kron(m, n) * state), 1e-14);
        }
}

TEST(Catalog, MdiEffectsFormAPovm) {
  const Matrix s = mdi_ptp_effect(0).matrix() + mdi_ptp_effect(1).matrix();
  EXPECT_LE(oracle::max_abs(s - Matrix::Identity(2, 2)), 1e-15);
  for (int b = 0; b < 2; ++b) EXPECT_GE(oracle::lambda_min(mdi_ptp_effect(b).matrix()), 0.0);
}

TEST(Catalog, EmbeddedChannelCarriesTheBwiValue) {
  const auto& [a, f] = embedded_ptp_channel();
  EXPECT_NEAR(evaluate_epr(f, a), evaluate_epr(ptp_functional(true), ptp_assemblage()), 1e-12);
  EXPECT_NEAR(evaluate_epr(f, a), -0.4135, 1e-12);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto q = std::get<BwIAssemblage>(random_quantum(Scenario::bwi, seed).assemblage);
    const auto e = embed_bwi_in_channel(q);
    EXPECT_TRUE(validate(e).passed());
    EXPECT_NEAR(evaluate_epr(f, e), evaluate_epr(ptp_functional(true), q), 1e-12);
  }
  EXPECT_THROW(embed_bwi_functional(embed_bwi_functional(ptp_functional(true))), ScenarioMismatchError);
}

TEST(Catalog, TwoQubitFunctionalIsLocalSum) {
  const auto f = ptp_two_qubit_functional();
  const auto one = ptp_functional(true);
  const oracle::Mat i = oracle::I2();
  for (const auto& [k, op] : f.operators.elements()) {
    const oracle::Mat g = one.operators.at(k).matrix();
    EXPECT_LE(oracle::max_abs(op.matrix() - oracle::kron(g, i) - oracle::kron(i, g)), 1e-16);
  }
  // value splits into the PTP value of each reduced qubit assemblage
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto a = std::get<BwIAssemblage>(random_quantum(Scenario::bwi, seed, {}, 2).assemblage);
    double expect = 0.0;
    for (const auto& [k, sigma] : a.elements()) {
      const oracle::Mat g = one.operators.at(k).matrix();
      expect += oracle::trace_re(g * oracle::partial_trace2(sigma.matrix(), 2, 2, 1));
      expect += oracle::trace_re(g * oracle::partial_trace2(sigma.matrix(), 2, 2, 0));
    }
    EXPECT_NEAR(evaluate_epr(f, a), expect, 1e-12);
    EXPECT_GE(expect, -1e-7);
  }
}

TEST(Catalog, ChshMdiFunctional) {
  const auto f = chsh_mdi_functional();
  // decohered control: value is 2√2 minus CHSH of the basis-input box
  const auto a = mdi_ptp_assemblage();
  const auto p = mdi_ptp_probabilities();
  double chsh = 0.0;
  for (int x = 1; x <= 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int al = 0; al < 2; ++al)
        for (int b = 0; b < 2; ++b) {
          const double s = ((al + b + (x - 1) * y) % 2 == 0) ? 1.0 : -1.0;
          chsh += s * p.at(SliceKey{{al, b}, {x, y}});
        }
  EXPECT_NEAR(evaluate_epr(f, a), 2.0 * std::sqrt(2.0) - chsh, 1e-12);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    EXPECT_GE(evaluate_epr(f, random_quantum(Scenario::mdi, seed).assemblage), -1e-7) << seed;
  }
}
