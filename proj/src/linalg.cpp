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

#include "eprkit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace eprkit {

namespace {

void require_supported_dim(int dim) {
  if (dim < 1 || dim > kMaxOperatorDim || !is_power_of_two(dim)) {
    throw DimensionError("operator dimension " + std::to_string(dim) +
                         " is not a power of two in [1, " + std::to_string(kMaxOperatorDim) + "]");
  }
}

void require_subsystems(int total, const std::vector<int>& dims, int index) {
  if (dims.empty()) throw DimensionError("empty subsystem list");
  int product = 1;
  for (int d : dims) {
    if (d < 1) throw DimensionError("subsystem dimension must be positive");
    product *= d;
  }
  if (product != total) {
    throw DimensionError("subsystem dimensions multiply to " + std::to_string(product) +
                         " but the operator has dimension " + std::to_string(total));
  }
  if (index < 0 || index >= static_cast<int>(dims.size())) {
    throw DimensionError("subsystem index " + std::to_string(index) + " out of range");
  }
}

// Stride of subsystem `index` in a row-major multi-index.
int stride_of(const std::vector<int>& dims, int index) {
  int stride = 1;
  for (int k = static_cast<int>(dims.size()) - 1; k > index; --k) stride *= dims[k];
  return stride;
}

}  // namespace

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

int log2_exact(int n) {
  if (!is_power_of_two(n)) throw DimensionError(std::to_string(n) + " is not a power of two");
  int k = 0;
  while ((1 << k) < n) ++k;
  return k;
}

HermitianOperator::HermitianOperator(Matrix m, double tolerance) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw DimensionError("Hermitian operator must be square");
  require_supported_dim(static_cast<int>(m_.rows()));
  const double dev = max_abs_diff(m_, m_.adjoint());
  if (!(dev <= tolerance)) {
    throw NotHermitianError("matrix deviates from its adjoint by " + std::to_string(dev));
  }
}

HermitianOperator HermitianOperator::hermitian_part(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("Hermitian operator must be square");
  require_supported_dim(static_cast<int>(m.rows()));
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double dev = max_abs_diff(m, m.adjoint());
  if (!(dev <= 1e-8 * scale)) {
    throw NotHermitianError("computed matrix is not Hermitian (deviation " + std::to_string(dev) + ")");
  }
  Matrix h = 0.5 * (m + m.adjoint());
  return HermitianOperator(std::move(h), Trusted{});
}

HermitianOperator HermitianOperator::identity(int dim) {
  require_supported_dim(dim);
  return HermitianOperator(Matrix::Identity(dim, dim), Trusted{});
}

HermitianOperator HermitianOperator::zero(int dim) {
  require_supported_dim(dim);
  return HermitianOperator(Matrix::Zero(dim, dim), Trusted{});
}

HermitianOperator HermitianOperator::transpose() const {
  return HermitianOperator(Matrix(m_.transpose()), Trusted{});
}

HermitianOperator HermitianOperator::conjugate_by(const Matrix& u) const {
  if (u.cols() != m_.rows()) throw DimensionError("conjugation dimension mismatch");
  return hermitian_part(u * m_ * u.adjoint());
}

HermitianOperator& HermitianOperator::operator+=(const HermitianOperator& other) {
  if (other.dim() != dim()) throw DimensionError("operator sum dimension mismatch");
  m_ += other.m_;
  return *this;
}

HermitianOperator& HermitianOperator::operator-=(const HermitianOperator& other) {
  if (other.dim() != dim()) throw DimensionError("operator difference dimension mismatch");
  m_ -= other.m_;
  return *this;
}

HermitianOperator& HermitianOperator::operator*=(double s) {
  m_ *= s;
  return *this;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("shape mismatch");
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

double max_abs_diff(const HermitianOperator& a, const HermitianOperator& b) {
  return max_abs_diff(a.matrix(), b.matrix());
}

double trace_product(const HermitianOperator& a, const HermitianOperator& b) {
  if (a.dim() != b.dim()) throw DimensionError("trace product dimension mismatch");
  // tr(AB) = Σ_ij A_ij B_ji
  cplx acc = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) acc += a(i, j) * b(j, i);
  return acc.real();
}

Matrix pauli_i() { return Matrix::Identity(2, 2); }

Matrix pauli_x() {
  Matrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

Matrix pauli_y() {
  Matrix m(2, 2);
  m << 0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0;
  return m;
}

Matrix pauli_z() {
  Matrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

HermitianOperator basis_pauli(int w) {
  switch (w) {
    case 1: return HermitianOperator(pauli_z());
    case 2: return HermitianOperator(pauli_x());
    case 3: return HermitianOperator(pauli_y());
    default: throw InvalidArgumentError("Pauli label must be 1, 2 or 3, got " + std::to_string(w));
  }
}

HermitianOperator pauli_projector(int c, int w) {
  if (c != 0 && c != 1) throw InvalidArgumentError("projector outcome must be 0 or 1");
  const double sign = c == 0 ? 1.0 : -1.0;
  return 0.5 * (HermitianOperator::identity(2) + sign * basis_pauli(w));
}

Vector phi_plus(int n) {
  if (n < 0 || n > 2) throw DimensionError("phi_plus supports at most two qubit pairs");
  const int d = 1 << n;
  Vector v = Vector::Zero(d * d);
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (int k = 0; k < d; ++k) v(k * d + k) = amp;
  return v;
}

HermitianOperator phi_plus_projector(int n) {
  const Vector v = phi_plus(n);
  return HermitianOperator::hermitian_part(v * v.adjoint());
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

HermitianOperator tensor(const HermitianOperator& a, const HermitianOperator& b) {
  if (a.dim() * b.dim() > kMaxOperatorDim) throw DimensionError("tensor product exceeds maximum dimension");
  return HermitianOperator::hermitian_part(kron(a.matrix(), b.matrix()));
}

Matrix partial_trace(const Matrix& m, const std::vector<int>& dims, int traced) {
  if (m.rows() != m.cols()) throw DimensionError("partial trace needs a square matrix");
  require_subsystems(static_cast<int>(m.rows()), dims, traced);
  const int dt = dims[traced];
  const int stride = stride_of(dims, traced);
  const int out_dim = static_cast<int>(m.rows()) / dt;
  Matrix out = Matrix::Zero(out_dim, out_dim);
  // Full index = high * (dt * stride) + k * stride + low, reduced index = high * stride + low.
  for (int r = 0; r < out_dim; ++r) {
    const int r_hi = r / stride, r_lo = r % stride;
    for (int c = 0; c < out_dim; ++c) {
      const int c_hi = c / stride, c_lo = c % stride;
      cplx acc = 0.0;
      for (int k = 0; k < dt; ++k) {
        acc += m(r_hi * dt * stride + k * stride + r_lo, c_hi * dt * stride + k * stride + c_lo);
      }
      out(r, c) = acc;
    }
  }
  return out;
}

HermitianOperator partial_trace(const HermitianOperator& m, const std::vector<int>& dims, int traced) {
  return HermitianOperator::hermitian_part(partial_trace(m.matrix(), dims, traced));
}

Matrix partial_transpose(const Matrix& m, const std::vector<int>& dims, int index) {
  if (m.rows() != m.cols()) throw DimensionError("partial transpose needs a square matrix");
  require_subsystems(static_cast<int>(m.rows()), dims, index);
  const int d = dims[index];
  const int stride = stride_of(dims, index);
  const int n = static_cast<int>(m.rows());
  Matrix out(n, n);
  for (int r = 0; r < n; ++r) {
    const int rk = (r / stride) % d;
    for (int c = 0; c < n; ++c) {
      const int ck = (c / stride) % d;
      // swap the designated digit between row and column
      const int r2 = r + (ck - rk) * stride;
      const int c2 = c + (rk - ck) * stride;
      out(r, c) = m(r2, c2);
    }
  }
  return out;
}

HermitianOperator partial_transpose(const HermitianOperator& m, const std::vector<int>& dims, int index) {
  return HermitianOperator::hermitian_part(partial_transpose(m.matrix(), dims, index));
}

EigenDecomposition eig_hermitian(const HermitianOperator& op) {
  const int n = op.dim();
  Matrix a = op.matrix();
  Matrix v = Matrix::Identity(n, n);
  const double scale = std::max(1.0, a.norm());

  int sweep = 0;
  for (; sweep < kJacobiMaxSweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    if (std::sqrt(2.0 * off) <= kJacobiThreshold * scale) break;

    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double g = std::abs(a(p, q));
        if (g <= 1e-300) continue;
        const cplx phase = a(p, q) / g;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * g);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const cplx pc = std::conj(phase);

        // U acts on the (p, q) plane with columns (c, −s·conj(phase)) and (s, c·conj(phase)).
        for (int k = 0; k < n; ++k) {
          const cplx akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * pc * akq;
          a(k, q) = s * akp + c * pc * akq;
          const cplx vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * pc * vkq;
          v(k, q) = s * vkp + c * pc * vkq;
        }
        for (int k = 0; k < n; ++k) {
          const cplx apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * phase * aqk;
          a(q, k) = s * apk + c * phase * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });
  EigenDecomposition result;
  result.sweeps = sweep;
  result.values.reserve(n);
  result.vectors.resize(n, n);
  for (int k = 0; k < n; ++k) {
    result.values.push_back(a(order[k], order[k]).real());
    result.vectors.col(k) = v.col(order[k]);
  }
  return result;
}

double min_eigenvalue(const HermitianOperator& m) { return eig_hermitian(m).values.front(); }
double max_eigenvalue(const HermitianOperator& m) { return eig_hermitian(m).values.back(); }

KrausMap::KrausMap(int in_dim, int out_dim, std::vector<Matrix> kraus_ops)
    : in_dim_(in_dim), out_dim_(out_dim), ops_(std::move(kraus_ops)) {
  if (in_dim < 1 || out_dim < 1) throw DimensionError("Kraus map dimensions must be positive");
  if (ops_.empty()) throw InvalidArgumentError("Kraus map needs at least one operator");
  for (const auto& a : ops_) {
    if (a.rows() != out_dim || a.cols() != in_dim) {
      throw DimensionError("Kraus operator shape does not match " + std::to_string(out_dim) + "x" +
                           std::to_string(in_dim));
    }
  }
}

KrausMap KrausMap::identity(int dim) { return KrausMap(dim, dim, {Matrix::Identity(dim, dim)}); }

KrausMap KrausMap::unitary(const Matrix& u) {
  return KrausMap(static_cast<int>(u.cols()), static_cast<int>(u.rows()), {u});
}

Matrix KrausMap::apply(const Matrix& rho) const {
  if (rho.rows() != in_dim_ || rho.cols() != in_dim_) throw DimensionError("Kraus map input dimension mismatch");
  Matrix out = Matrix::Zero(out_dim_, out_dim_);
  for (const auto& a : ops_) out += a * rho * a.adjoint();
  return out;
}

HermitianOperator KrausMap::apply(const HermitianOperator& rho) const {
  return HermitianOperator::hermitian_part(apply(rho.matrix()));
}

double KrausMap::trace_preservation_residual() const {
  Matrix sum = Matrix::Zero(in_dim_, in_dim_);
  for (const auto& a : ops_) sum += a.adjoint() * a;
  return max_abs_diff(sum, Matrix::Identity(in_dim_, in_dim_));
}

HermitianOperator choi(const KrausMap& map) {
  const int d = map.in_dim();
  if (!is_power_of_two(d)) throw DimensionError("Choi construction needs a qubit-register input");
  const Vector phi = phi_plus(log2_exact(d));
  const Matrix id = Matrix::Identity(d, d);
  Matrix j = Matrix::Zero(map.out_dim() * d, map.out_dim() * d);
  for (const auto& a : map.kraus_ops()) {
    const Vector w = kron(a, id) * phi;
    j += w * w.adjoint();
  }
  return HermitianOperator::hermitian_part(j);
}

HermitianOperator apply_choi(const HermitianOperator& J, const HermitianOperator& input) {
  const int din = input.dim();
  if (J.dim() % din != 0) throw DimensionError("Choi operator is not defined on out ⊗ in for this input");
  const int dout = J.dim() / din;
  const Matrix lhs = kron(Matrix::Identity(dout, dout), input.matrix().transpose());
  Matrix out = partial_trace(Matrix(lhs * J.matrix()), {dout, din}, 1);
  out *= static_cast<double>(din);
  return HermitianOperator::hermitian_part(out);
}

KrausMap transpose_dual(const KrausMap& map) {
  std::vector<Matrix> ops;
  ops.reserve(map.kraus_ops().size());
  for (const auto& a : map.kraus_ops()) ops.push_back(a.conjugate());
  return KrausMap(map.in_dim(), map.out_dim(), std::move(ops));
}

}  // namespace eprkit
