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

// Seeded random matrices. Every generator takes the engine by reference so
// callers decide how streams are split.

#include <cstdint>
#include <random>

#include "eprkit/linalg.hpp"

namespace eprkit {

using Rng = std::mt19937_64;

/// Matrix of independent standard complex Gaussians.
Matrix ginibre(Rng& rng, int rows, int cols);

/// Density matrix G G† / tr(G G†) for a square Ginibre G.
HermitianOperator random_state(Rng& rng, int dim);

/// Haar-like unitary: QR of a Ginibre matrix with the phases of R's diagonal removed.
Matrix random_unitary(Rng& rng, int dim);

/// First `cols` columns of a random unitary of size rows.
Matrix random_isometry(Rng& rng, int rows, int cols);

/// Hermitian part of a Ginibre matrix.
HermitianOperator random_hermitian(Rng& rng, int dim);

/// Random CPTP map via a Stinespring isometry with the given environment dimension.
KrausMap random_channel(Rng& rng, int in_dim, int out_dim, int env_dim = 2);

}  // namespace eprkit
