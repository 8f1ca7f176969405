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

#include "eprkit/linalg.hpp"
#include "eprkit/random.hpp"
#include "oracles.hpp"

using namespace eprkit;

namespace {

HermitianOperator H(const Matrix& m) { return HermitianOperator(m); }

void expect_hermitian(const HermitianOperator& op) {
  EXPECT_LE(max_abs_diff(op.matrix(), op.matrix().adjoint()), 1e-12);
}

}  // namespace

TEST(HermitianOperator, RejectsNonHermitianInput) {
  Matrix m = pauli_x();
  m(0, 1) = 2.0;
  EXPECT_THROW(HermitianOperator{m}, NotHermitianError);
}

TEST(HermitianOperator, RejectsUnsupportedDimensions) {
  EXPECT_THROW(HermitianOperator{Matrix::Identity(3, 3)}, DimensionError);
  EXPECT_THROW(HermitianOperator{Matrix::Identity(32, 32)}, DimensionError);
  EXPECT_NO_THROW(HermitianOperator{Matrix::Identity(16, 16)});
}

TEST(HermitianOperator, BinaryOperationsCheckDimensions) {
  EXPECT_THROW(HermitianOperator::identity(2) + HermitianOperator::identity(4), DimensionError);
  EXPECT_THROW(trace_product(HermitianOperator::identity(2), HermitianOperator::identity(4)), DimensionError);
}

TEST(ProjectorBasis, CompletenessAndIdempotence) {
  for (int w = 1; w <= 3; ++w) {
    const auto p0 = pauli_projector(0, w), p1 = pauli_projector(1, w);
    EXPECT_LE(max_abs_diff(p0 + p1, HermitianOperator::identity(2)), 1e-15);
    for (int c = 0; c < 2; ++c) {
      const Matrix p = pauli_projector(c, w).matrix();
      EXPECT_LE(max_abs_diff(p * p, p), 1e-12);
    }
  }
  // w = 1, 2, 3 select Z, X, Y
  EXPECT_LE(max_abs_diff(pauli_projector(0, 1).matrix(), (oracle::I2() + oracle::Z()) / 2.0), 1e-15);
  EXPECT_LE(max_abs_diff(pauli_projector(1, 2).matrix(), (oracle::I2() - oracle::X()) / 2.0), 1e-15);
  EXPECT_LE(max_abs_diff(pauli_projector(0, 3).matrix(), (oracle::I2() + oracle::Y()) / 2.0), 1e-15);
}

TEST(Tensor, Examples) {
  Matrix zz = Matrix::Zero(4, 4);
  zz.diagonal() << 1, -1, -1, 1;
  EXPECT_LE(max_abs_diff(tensor(H(pauli_z()), H(pauli_z())).matrix(), zz), 0.0);
  EXPECT_LE(max_abs_diff(tensor(HermitianOperator::identity(2), HermitianOperator::identity(2)),
                         HermitianOperator::identity(4)),
            0.0);
  const auto p = tensor(pauli_projector(0, 1), pauli_projector(0, 2));
  EXPECT_NEAR(p.trace(), 1.0, 1e-15);
  EXPECT_LE(max_abs_diff(p.matrix() * p.matrix(), p.matrix()), 1e-15);
  EXPECT_LE(max_abs_diff(p.matrix(), oracle::kron(pauli_projector(0, 1).matrix(), pauli_projector(0, 2).matrix())), 1e-15);
}

TEST(PartialTrace, Examples) {
  const auto phi = phi_plus_projector(1);
  EXPECT_LE(max_abs_diff(partial_trace(phi, {2, 2}, 1).matrix(), oracle::I2() / 2.0), 1e-15);
  const auto a = H(pauli_x() + 2.0 * pauli_i());
  const auto b = H(pauli_y() + 0.5 * pauli_z());
  EXPECT_LE(max_abs_diff(partial_trace(tensor(a, b), {2, 2}, 0).matrix(), a.trace() * b.matrix()), 1e-14);
  EXPECT_LE(max_abs_diff(partial_trace(H(oracle::swap() / 2.0), {2, 2}, 1).matrix(), oracle::I2() / 2.0), 1e-15);
  EXPECT_THROW(partial_trace(phi, {2, 4}, 0), DimensionError);
}

TEST(PartialTrace, MatchesOracleAndPreservesTrace) {
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    for (auto [d0, d1] : {std::pair{2, 2}, std::pair{2, 4}, std::pair{4, 2}, std::pair{4, 4}, std::pair{2, 8}}) {
      const auto m = random_hermitian(rng, d0 * d1);
      for (int k = 0; k < 2; ++k) {
        const auto r = partial_trace(m, {d0, d1}, k);
        EXPECT_LE(max_abs_diff(r.matrix(), oracle::partial_trace2(m.matrix(), d0, d1, k)), 1e-12);
        EXPECT_NEAR(r.trace(), m.trace(), 1e-12);
        expect_hermitian(r);
      }
    }
  }
}

TEST(PartialTrace, ThreeFactorMiddle) {
  Rng rng(3);
  const auto a = random_hermitian(rng, 2), b = random_hermitian(rng, 2), c = random_hermitian(rng, 4);
  const auto abc = tensor(tensor(a, b), c);
  const auto r = partial_trace(abc, {2, 2, 4}, 1);
  EXPECT_LE(max_abs_diff(r.matrix(), b.trace() * oracle::kron(a.matrix(), c.matrix())), 1e-12);
}

TEST(PartialTranspose, Examples) {
  const auto pt = partial_transpose(phi_plus_projector(1), {2, 2}, 1);
  EXPECT_LE(max_abs_diff(pt.matrix(), oracle::swap() / 2.0), 1e-15);
  EXPECT_NEAR(min_eigenvalue(pt), -0.5, 1e-12);
  const auto a = H(pauli_y() + pauli_z()), b = H(pauli_y() + 0.3 * pauli_x());
  EXPECT_LE(max_abs_diff(partial_transpose(tensor(a, b), {2, 2}, 1).matrix(),
                         oracle::kron(a.matrix(), b.matrix().transpose())),
            1e-15);
}

TEST(PartialTranspose, InvolutiveAndMatchesOracle) {
  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    for (auto [d0, d1] : {std::pair{2, 2}, std::pair{2, 4}, std::pair{4, 4}}) {
      const auto m = random_hermitian(rng, d0 * d1);
      for (int k = 0; k < 2; ++k) {
        const auto p = partial_transpose(m, {d0, d1}, k);
        EXPECT_LE(max_abs_diff(p.matrix(), oracle::partial_transpose2(m.matrix(), d0, d1, k)), 1e-15);
        EXPECT_LE(max_abs_diff(partial_transpose(p, {d0, d1}, k), m), 0.0);
        expect_hermitian(p);
      }
    }
  }
}

TEST(Eigensolver, Examples) {
  auto e = eig_hermitian(H(pauli_z()));
  ASSERT_EQ(e.values.size(), 2u);
  EXPECT_NEAR(e.values[0], -1.0, 1e-15);
  EXPECT_NEAR(e.values[1], 1.0, 1e-15);
  e = eig_hermitian(pauli_projector(0, 2));
  EXPECT_NEAR(e.values[0], 0.0, 1e-15);
  EXPECT_NEAR(e.values[1], 1.0, 1e-15);
  e = eig_hermitian(tensor(H(pauli_z()), H(pauli_z())));
  const std::vector<double> want{-1, -1, 1, 1};
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(e.values[i], want[i], 1e-15);
}

TEST(Eigensolver, RandomResidualsAgainstEigen) {
  Rng rng(2024);
  for (int dim : {2, 4, 8, 16}) {
    for (int t = 0; t < 250; ++t) {
      const auto m = random_hermitian(rng, dim);
      const auto e = eig_hermitian(m);
      Matrix lam = Matrix::Zero(dim, dim);
      for (int i = 0; i < dim; ++i) lam(i, i) = e.values[i];
      EXPECT_LE(max_abs_diff(Matrix(m.matrix() * e.vectors), Matrix(e.vectors * lam)), 1e-9);
      EXPECT_LE(max_abs_diff(Matrix(e.vectors.adjoint() * e.vectors), Matrix::Identity(dim, dim)), 1e-10);
      const auto ref = oracle::eigenvalues(m.matrix());
      for (int i = 0; i < dim; ++i) EXPECT_NEAR(e.values[i], ref[i], 1e-9);
      for (int i = 1; i < dim; ++i) EXPECT_LE(e.values[i - 1], e.values[i]);
      EXPECT_LT(e.sweeps, kJacobiMaxSweeps);
    }
  }
}

TEST(Eigensolver, DegenerateAndDiagonalInputs) {
  const auto e = eig_hermitian(HermitianOperator::identity(8));
  for (double v : e.values) EXPECT_NEAR(v, 1.0, 1e-15);
  EXPECT_EQ(e.sweeps, 0);
  EXPECT_NEAR(min_eigenvalue(HermitianOperator::zero(4)), 0.0, 0.0);
}

TEST(Choi, Examples) {
  EXPECT_LE(max_abs_diff(choi(KrausMap::identity(2)).matrix(), oracle::phi_plus()), 1e-15);
  // discard and prepare ρ0: Kraus |ψ_i⟩⟨k| weighted by the eigen-decomposition of ρ0
  const Matrix rho0 = (pauli_i() + 0.6 * pauli_z()) / 2.0;
  std::vector<Matrix> ops;
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) {
      Matrix a = Matrix::Zero(2, 2);
      a(i, k) = std::sqrt(rho0(i, i).real());
      ops.push_back(a);
    }
  const KrausMap prep(2, 2, ops);
  EXPECT_LE(max_abs_diff(choi(prep).matrix(), oracle::kron(rho0, oracle::I2() / 2.0)), 1e-15);
  const Matrix xx = oracle::kron(pauli_x(), oracle::I2());
  EXPECT_LE(max_abs_diff(choi(KrausMap::unitary(pauli_x())).matrix(), Matrix(xx * oracle::phi_plus() * xx)), 1e-15);
}

TEST(ApplyChoi, Examples) {
  Rng rng(1);
  const auto sigma = random_state(rng, 2);
  EXPECT_LE(max_abs_diff(apply_choi(phi_plus_projector(1), sigma), sigma), 1e-15);
  const Matrix rho0 = (pauli_i() + 0.2 * pauli_x()) / 2.0;
  const auto j = H(oracle::kron(rho0, oracle::I2() / 2.0));
  EXPECT_LE(max_abs_diff(apply_choi(j, sigma).matrix(), sigma.trace() * rho0), 1e-15);
  EXPECT_LE(max_abs_diff(apply_choi(choi(KrausMap::unitary(pauli_x())), H(pauli_z())).matrix(), Matrix(-pauli_z())), 1e-15);
}

TEST(ChoiProperties, RoundTripPositivityAndMarginal) {
  Rng rng(77);
  for (int t = 0; t < 100; ++t) {
    const int in = t % 2 == 0 ? 2 : 4, out = t % 3 == 0 ? 2 : 4;
    const KrausMap k = random_channel(rng, in, out, std::max(1, in / out) + t % 2);
    const auto j = choi(k);
    std::vector<Matrix> ops(k.kraus_ops().begin(), k.kraus_ops().end());
    EXPECT_LE(max_abs_diff(j.matrix(), oracle::choi(ops)), 1e-12);
    EXPECT_GE(min_eigenvalue(j), -1e-10);
    EXPECT_NEAR(j.trace(), 1.0, 1e-10);
    EXPECT_LE(max_abs_diff(partial_trace(j, {out, in}, 0).matrix(), Matrix(Matrix::Identity(in, in) / double(in))), 1e-10);
    const auto rho = random_state(rng, in);
    EXPECT_LE(max_abs_diff(apply_choi(j, rho).matrix(), oracle::apply_kraus(ops, rho.matrix())), 1e-12);
  }
}

TEST(KrausMap, ShapeAndTracePreservation) {
  EXPECT_THROW(KrausMap(2, 2, {Matrix::Identity(3, 2)}), DimensionError);
  EXPECT_THROW(KrausMap(2, 2, {}), InvalidArgumentError);
  EXPECT_TRUE(KrausMap::identity(4).is_trace_preserving());
  EXPECT_FALSE(KrausMap(2, 2, {Matrix(0.5 * pauli_i())}).is_trace_preserving());
}

TEST(TransposeDual, Examples) {
  const auto dual_id = transpose_dual(KrausMap::identity(2));
  EXPECT_LE(max_abs_diff(dual_id.kraus_ops()[0], pauli_i()), 0.0);
  const auto dual_x = transpose_dual(KrausMap::unitary(pauli_x()));
  EXPECT_LE(max_abs_diff(dual_x.kraus_ops()[0], pauli_x()), 0.0);
  Matrix s = Matrix::Zero(2, 2);
  s(0, 0) = 1.0;
  s(1, 1) = cplx(0, 1);
  const auto dual_s = transpose_dual(KrausMap::unitary(s));
  Matrix s_conj = Matrix::Zero(2, 2);
  s_conj(0, 0) = 1.0;
  s_conj(1, 1) = cplx(0, -1);
  EXPECT_LE(max_abs_diff(dual_s.kraus_ops()[0], s_conj), 0.0);
  Rng rng(100);
  for (int t = 0; t < 100; ++t) {
    const auto rho = random_state(rng, 2);
    const Matrix lhs = KrausMap::unitary(s).apply(rho.matrix()).transpose();
    EXPECT_LE(max_abs_diff(lhs, dual_s.apply(Matrix(rho.matrix().transpose()))), 1e-10);
  }
}

TEST(TransposeDual, PropertyOnRandomChannels) {
  Rng rng(8);
  for (int t = 0; t < 100; ++t) {
    const KrausMap phi = random_channel(rng, 2, 2, 2);
    const KrausMap psi = transpose_dual(phi);
    EXPECT_TRUE(psi.is_trace_preserving());
    const auto rho = random_state(rng, 2);
    EXPECT_LE(max_abs_diff(Matrix(phi.apply(rho.matrix()).transpose()), psi.apply(Matrix(rho.matrix().transpose()))), 1e-10);
    // dual of the dual acts like the original map
    const KrausMap back = transpose_dual(psi);
    EXPECT_LE(max_abs_diff(back.apply(rho.matrix()), phi.apply(rho.matrix())), 1e-12);
  }
}

TEST(Hermiticity, PreservedByOperations) {
  Rng rng(9);
  for (int t = 0; t < 20; ++t) {
    const auto a = random_hermitian(rng, 2), b = random_hermitian(rng, 4);
    expect_hermitian(tensor(a, b));
    expect_hermitian(partial_trace(tensor(a, b), {2, 4}, 1));
    expect_hermitian(partial_transpose(tensor(a, b), {2, 4}, 0));
  }
}

TEST(Random, DeterministicForSeed) {
  Rng r1(42), r2(42);
  EXPECT_LE(max_abs_diff(random_state(r1, 4), random_state(r2, 4)), 0.0);
  Rng r3(3);
  const Matrix u = random_unitary(r3, 8);
  EXPECT_LE(max_abs_diff(Matrix(u.adjoint() * u), Matrix::Identity(8, 8)), 1e-12);
}
