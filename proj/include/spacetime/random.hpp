// Copyright 2026 The spacetime-swap Authors
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

// Random states, unitaries and channels for property tests and the
// uniqueness check. All generators draw from a caller-owned engine.

#pragma once

#include <random>

#include "spacetime/channels.hpp"

namespace spacetime {

using Rng = std::mt19937_64;

/// Complex Ginibre matrix with iid standard normal real and imaginary parts.
ComplexMatrix random_ginibre(Index rows, Index cols, Rng& rng);
/// Haar-distributed unitary via QR with the phase fix on R's diagonal.
ComplexMatrix random_unitary(Index d, Rng& rng);
/// Haar isometry from C^cols into C^rows (rows >= cols).
ComplexMatrix random_isometry(Index rows, Index cols, Rng& rng);
ComplexMatrix random_hermitian(Index d, Rng& rng);
/// |psi><psi| for a uniformly random unit vector.
ComplexMatrix random_pure_state(Index d, Rng& rng);
/// Marginal of a random pure state on C^d (x) C^env; rank <= env.
ComplexMatrix random_density(Index d, Index env, Rng& rng);
/// E(rho) = Tr_env[V rho V^dagger] for a Haar isometry V into
/// C^dim_out (x) C^dim_env.
Channel random_channel(Index dim_in, Index dim_out, Index dim_env, Rng& rng);

}  // namespace spacetime
