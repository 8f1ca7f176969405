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

// Dense complex linear algebra for small multi-qubit operators.
//
// Conventions used throughout the library:
//  * tensor factors are ordered left to right; index 0 of a subsystem list is
//    the most significant digit of the computational basis index;
//  * Choi operators live on (output ⊗ input-reference) and are built from the
//    normalised maximally entangled state, so a channel has a unit-trace Choi
//    operator;
//  * the Pauli label w = 1, 2, 3 maps to Z, X, Y.

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "eprkit/errors.hpp"

namespace eprkit {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr int kMaxOperatorDim = 16;

/// Complex Hermitian matrix whose dimension is a power of two no larger than 16.
///
/// Construction from raw data rejects matrices that are not Hermitian within
/// kHermitianTolerance instead of symmetrising them. Results of arithmetic
/// performed by the library are projected onto their Hermitian part.
class HermitianOperator {
 public:
  HermitianOperator() = default;
  explicit HermitianOperator(Matrix m, double tolerance = kHermitianTolerance);

  /// Hermitian part (m + m†)/2 of a computed matrix. Throws NotHermitianError
  /// if m is far from Hermitian, which signals a bug upstream.
  static HermitianOperator hermitian_part(const Matrix& m);
  static HermitianOperator identity(int dim);
  static HermitianOperator zero(int dim);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Matrix& matrix() const { return m_; }
  cplx operator()(int i, int j) const { return m_(i, j); }

  double trace() const { return m_.trace().real(); }
  HermitianOperator transpose() const;
  HermitianOperator conjugate_by(const Matrix& u) const;  // u m u†

  HermitianOperator& operator+=(const HermitianOperator& other);
  HermitianOperator& operator-=(const HermitianOperator& other);
  HermitianOperator& operator*=(double s);

  friend HermitianOperator operator+(HermitianOperator a, const HermitianOperator& b) { return a += b; }
  friend HermitianOperator operator-(HermitianOperator a, const HermitianOperator& b) { return a -= b; }
  friend HermitianOperator operator*(double s, HermitianOperator a) { return a *= s; }
  friend HermitianOperator operator*(HermitianOperator a, double s) { return a *= s; }

 private:
  struct Trusted {};
  HermitianOperator(Matrix m, Trusted) : m_(std::move(m)) {}
  Matrix m_;
};

/// Largest entrywise modulus of a − b.
double max_abs_diff(const Matrix& a, const Matrix& b);
double max_abs_diff(const HermitianOperator& a, const HermitianOperator& b);

/// Re tr(a b); exact for Hermitian arguments.
double trace_product(const HermitianOperator& a, const HermitianOperator& b);

bool is_power_of_two(int n);
int log2_exact(int n);

// Pauli matrices and the projector basis used to turn operators into Bell coefficients.
Matrix pauli_i();
Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();

/// Pauli operator for label w: 1 ↦ Z, 2 ↦ X, 3 ↦ Y.
HermitianOperator basis_pauli(int w);

/// Projector onto the (−1)^c eigenspace of basis_pauli(w).
HermitianOperator pauli_projector(int c, int w);

/// (|0…0⟩|0…0⟩ + … )/√(2^n) on (2^n) ⊗ (2^n).
Vector phi_plus(int n);
HermitianOperator phi_plus_projector(int n);

Matrix kron(const Matrix& a, const Matrix& b);
HermitianOperator tensor(const HermitianOperator& a, const HermitianOperator& b);

Matrix partial_trace(const Matrix& m, const std::vector<int>& subsystem_dims, int traced_index);
HermitianOperator partial_trace(const HermitianOperator& m, const std::vector<int>& subsystem_dims,
                                int traced_index);

Matrix partial_transpose(const Matrix& m, const std::vector<int>& subsystem_dims, int transposed_index);
HermitianOperator partial_transpose(const HermitianOperator& m, const std::vector<int>& subsystem_dims,
                                    int transposed_index);

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  Matrix vectors;              // orthonormal columns, same order as values
  int sweeps = 0;
};

inline constexpr double kJacobiThreshold = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;

/// Cyclic Jacobi diagonalisation of a Hermitian operator.
EigenDecomposition eig_hermitian(const HermitianOperator& m);
double min_eigenvalue(const HermitianOperator& m);
double max_eigenvalue(const HermitianOperator& m);

/// Completely positive map given by Kraus operators A_k : C^in_dim → C^out_dim.
class KrausMap {
 public:
  KrausMap() = default;
  KrausMap(int in_dim, int out_dim, std::vector<Matrix> kraus_ops);

  static KrausMap identity(int dim);
  static KrausMap unitary(const Matrix& u);

  int in_dim() const { return in_dim_; }
  int out_dim() const { return out_dim_; }
  const std::vector<Matrix>& kraus_ops() const { return ops_; }

  Matrix apply(const Matrix& rho) const;
  HermitianOperator apply(const HermitianOperator& rho) const;

  /// max |Σ_k A_k† A_k − I| entrywise.
  double trace_preservation_residual() const;
  bool is_trace_preserving(double tolerance = 1e-10) const {
    return trace_preservation_residual() <= tolerance;
  }

 private:
  int in_dim_ = 0;
  int out_dim_ = 0;
  std::vector<Matrix> ops_;
};

/// Choi operator (Φ ⊗ id)(|φ⟩⟨φ|) on out ⊗ in, with |φ⟩ normalised.
HermitianOperator choi(const KrausMap& map);

/// Action of the map whose Choi operator is J:  in_dim · tr_in[(I_out ⊗ inputᵀ) J].
HermitianOperator apply_choi(const HermitianOperator& J, const HermitianOperator& input);

/// Map Ψ with Kraus operators conj(A_k), so that Φ(ρ)ᵀ = Ψ(ρᵀ).
KrausMap transpose_dual(const KrausMap& map);

}  // namespace eprkit
