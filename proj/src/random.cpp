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

#include "eprkit/random.hpp"

#include <cmath>

namespace eprkit {

Matrix ginibre(Rng& rng, int rows, int cols) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = cplx(re, im);
    }
  return g;
}

HermitianOperator random_state(Rng& rng, int dim) {
  const Matrix g = ginibre(rng, dim, dim);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return HermitianOperator::hermitian_part(rho);
}

Matrix random_unitary(Rng& rng, int dim) {
  const Matrix g = ginibre(rng, dim, dim);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(dim, dim);
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < dim; ++k) {
    const double mag = std::abs(r(k, k));
    if (mag > 0.0) q.col(k) *= r(k, k) / mag;
  }
  return q;
}

Matrix random_isometry(Rng& rng, int rows, int cols) {
  if (cols > rows) throw DimensionError("isometry needs cols <= rows");
  return random_unitary(rng, rows).leftCols(cols);
}

HermitianOperator random_hermitian(Rng& rng, int dim) {
  const Matrix g = ginibre(rng, dim, dim);
  return HermitianOperator::hermitian_part(0.5 * (g + g.adjoint()));
}

KrausMap random_channel(Rng& rng, int in_dim, int out_dim, int env_dim) {
  // V : in -> out ⊗ env, Kraus A_k = (I_out ⊗ ⟨k|) V
  const Matrix v = random_isometry(rng, out_dim * env_dim, in_dim);
  std::vector<Matrix> ops;
  for (int k = 0; k < env_dim; ++k) {
    Matrix a(out_dim, in_dim);
    for (int o = 0; o < out_dim; ++o) a.row(o) = v.row(o * env_dim + k);
    ops.push_back(a);
  }
  return KrausMap(in_dim, out_dim, std::move(ops));
}

}  // namespace eprkit
