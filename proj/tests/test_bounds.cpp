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
#include "eprkit/realisation.hpp"
#include "oracles.hpp"

using namespace eprkit;

namespace {

EPRFunctional random_bwi_functional(std::uint64_t seed, int xs = 3, int ys = 2, int dim = 2) {
  Rng rng(seed);
  EPRFunctional f;
  f.scenario = Scenario::bwi;
  f.operators = IndexedOperators({{0, 2}, {1, xs}, {0, ys}}, dim);
  for (const auto& k : f.operators.keys()) f.operators.set(k, random_hermitian(rng, dim));
  return f;
}

// Brute force: min over f of Σ_y λ_min(Σ_x F_{f(x)xy}) with Eigen eigenvalues.
double oracle_classical(const EPRFunctional& f) {
  const auto& al = f.operators.alphabets();
  const int xs = al[1].size;
  double best = 1e300;
  for (int idx = 0; idx < (1 << xs); ++idx) {
    double total = 0.0;
    for (int y : al[2].labels()) {
      oracle::Mat g = oracle::Mat::Zero(f.operators.dim(), f.operators.dim());
      for (int i = 0; i < xs; ++i) g += f.operators.at({(idx >> i) & 1, al[1].first + i, y}).matrix();
      total += oracle::lambda_min(g);
    }
    best = std::min(best, total);
  }
  return best;
}

}  // namespace

TEST(ClassicalBound, RawPtpIsThreeMinusRootThree) {
  const auto r = classical_bound(ptp_functional(false));
  EXPECT_NEAR(r.value, 3.0 - std::sqrt(3.0), 1e-10);
  EXPECT_NEAR(r.value, 1.2679, 5e-5);
  EXPECT_EQ(r.strategies, 8);
  EXPECT_TRUE(r.tight);
  ASSERT_TRUE(r.strategy.has_value());
  EXPECT_NEAR(strategy_value(ptp_functional(false), *r.strategy), r.value, 1e-14);
  EXPECT_NEAR(oracle_classical(ptp_functional(false)), r.value, 1e-12);
}

TEST(ClassicalBound, NormalizedPtp) {
  const double expect = 3.0 - std::sqrt(3.0) - 0.4135;
  EXPECT_NEAR(classical_bound(ptp_functional(true)).value, expect, 1e-10);
  EXPECT_NEAR(classical_bound(ptp_functional(true)).value, 0.854449, 1e-6);
}

TEST(ClassicalBound, MatchesBruteForce) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto f = random_bwi_functional(seed, 1 + static_cast<int>(seed % 4), 1 + static_cast<int>(seed % 3));
    EXPECT_NEAR(classical_bound(f).value, oracle_classical(f), 1e-10) << seed;
  }
}

TEST(ClassicalBound, IdentityShiftCovariance) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto f = random_bwi_functional(seed);
    const double c = 0.1 * static_cast<double>(seed) - 1.3;
    EPRFunctional g = f;
    for (const auto& [k, op] : f.operators.elements()) g.operators.set(k, op + c * HermitianOperator::identity(2));
    EXPECT_NEAR(classical_bound(g).value, classical_bound(f).value + c * 3 * 2, 1e-10);
  }
}

TEST(ClassicalBound, GuardAndShapeErrors) {
  EPRFunctional big;
  big.scenario = Scenario::bwi;
  big.operators = IndexedOperators({{0, 2}, {1, 21}, {0, 1}}, 2);
  for (const auto& k : big.operators.keys()) big.operators.set(k, HermitianOperator::identity(2));
  EXPECT_THROW(classical_bound(big), GuardExceededError);

  EPRFunctional mdi = big;
  mdi.scenario = Scenario::mdi;
  EXPECT_THROW(classical_bound(mdi), ScenarioMismatchError);

  EPRFunctional gap = ptp_functional(false);
  gap.operators = IndexedOperators(gap.operators.alphabets(), 2);
  EXPECT_THROW(classical_bound(gap), MissingEntryError);
}

TEST(NsBound, RawPtpIsZeroAndAttained) {
  const auto r = ns_lower_bound(ptp_functional(false));
  EXPECT_NEAR(r.value, 0.0, 1e-12);
  EXPECT_NEAR(evaluate_epr(ptp_functional(false), ptp_assemblage()), r.value, 1e-12);
  EXPECT_NEAR(ns_lower_bound(ptp_functional(true)).value, -0.4135, 1e-12);
}

TEST(NsBound, BelowClassicalAlways) {
  for (std::uint64_t seed = 100; seed < 200; ++seed) {
    const auto f = random_bwi_functional(seed, 1 + static_cast<int>(seed % 4), 1 + static_cast<int>(seed % 3),
                                         seed % 2 ? 2 : 4);
    EXPECT_LE(ns_lower_bound(f).value, classical_bound(f).value + 1e-12) << seed;
  }
}

TEST(NsBound, BelowEveryValidAssemblage) {
  const auto f = ptp_functional(true);
  const double ns = ns_lower_bound(f).value;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    EXPECT_GE(evaluate_epr(f, random_quantum(Scenario::bwi, seed).assemblage), ns - 1e-12);
  }
}

TEST(Seesaw, BracketOnNormalizedPtp) {
  SeesawOptions opt;
  opt.restarts = 10;
  const auto r = seesaw_quantum(ptp_functional(true), opt);
  EXPECT_GE(r.value, 0.4134 - 0.4135 - 1e-9);  // β^Q ≥ β^AQ, shifted by −β^AQ
  EXPECT_LE(r.value, 1.2680 - 0.4135);
  EXPECT_EQ(r.restarts, 10);
  ASSERT_TRUE(r.realisation.has_value());
  r.realisation->check();
  EXPECT_NEAR(evaluate_epr(ptp_functional(true), realize_bwi(*r.realisation)), r.value, 1e-9);
}

TEST(Seesaw, MonotoneAndAboveNsBound) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto f = random_bwi_functional(seed + 7);
    SeesawOptions opt;
    opt.seed = seed;
    opt.restarts = 4;
    const auto r = seesaw_quantum(f, opt);
    ASSERT_EQ(r.histories.size(), 4u);
    for (const auto& h : r.histories) {
      ASSERT_FALSE(h.empty());
      EXPECT_LE(h.size(), 500u);
      for (size_t i = 1; i < h.size(); ++i) EXPECT_LE(h[i], h[i - 1] + 1e-12 * std::max(1.0, std::abs(h[i - 1])));
    }
    EXPECT_GE(r.value, ns_lower_bound(f).value - 1e-9);
  }
}

TEST(Seesaw, DeterministicPerSeed) {
  SeesawOptions opt;
  opt.seed = 42;
  opt.restarts = 3;
  const auto a = seesaw_quantum(ptp_functional(true), opt);
  const auto b = seesaw_quantum(ptp_functional(true), opt);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.histories, b.histories);
}

TEST(Seesaw, RejectsBadInput) {
  SeesawOptions opt;
  opt.restarts = 0;
  EXPECT_THROW(seesaw_quantum(ptp_functional(true), opt), InvalidArgumentError);
  EPRFunctional three;
  three.scenario = Scenario::bwi;
  three.operators = IndexedOperators({{0, 3}, {1, 2}, {0, 1}}, 2);
  for (const auto& k : three.operators.keys()) three.operators.set(k, HermitianOperator::identity(2));
  EXPECT_THROW(seesaw_quantum(three), InvalidArgumentError);
}

TEST(SelfTest, CanonicalStrategyReachesFourRootThree) {
  for (double r : {0.0, 0.3, 1.0}) EXPECT_NEAR(selftest_value(canonical_selftest_marginal(r)), 4.0 * std::sqrt(3.0), 1e-9);
}

TEST(SelfTest, CanonicalCorrelatorsByHand) {
  // ⟨C_w B_z⟩ = 2 tr[σ̃_{0|w} B_z] − 2 tr[σ̃_{1|w} B_z], each of magnitude 1/√3
  const auto p = canonical_selftest_marginal(1.0);
  for (int w = 1; w <= 3; ++w)
    for (int z = 1; z <= 4; ++z) {
      EXPECT_NEAR(correlator(p, z, w), kSelfTestSigns[w - 1][z - 1] / std::sqrt(3.0), 1e-12) << w << z;
    }
}

TEST(SelfTest, RangeOnArbitraryMarginals) {
  Rng rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < 200; ++t) {
    Marginal p;
    for (int z = 1; z <= 4; ++z)
      for (int w = 1; w <= 3; ++w) {
        double v[4], s = 0.0;
        for (double& e : v) s += (e = u(rng));
        for (int b = 0; b < 2; ++b)
          for (int c = 0; c < 2; ++c) p[{b, c, z, w}] = v[2 * b + c] / s;
      }
    const double v = selftest_value(p);
    EXPECT_GE(v, -12.0);
    EXPECT_LE(v, 12.0);
  }
}

TEST(SelfTest, DeterministicExtremes) {
  Marginal p;
  for (int z = 1; z <= 4; ++z)
    for (int w = 1; w <= 3; ++w)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c) {
          const bool agree = (b == c) == (kSelfTestSigns[w - 1][z - 1] > 0);
          p[{b, c, z, w}] = (agree && b == 0) ? 1.0 : 0.0;
        }
  EXPECT_NEAR(selftest_value(p), 12.0, 1e-15);
}
