// Copyright 2026 The qinv developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <cstdint>
#include <random>

#include "qinv/state.hpp"

namespace qinv {

using Rng = std::mt19937_64;

/// splitmix64 finalizer over (seed, index); derives independent substreams
/// so that parallel trials are reproducible regardless of scheduling.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

/// Unit-normalized state with amplitudes drawn i.i.d. from the standard
/// complex normal distribution. Deterministic for a fixed seed.
PureState random_state(int n, Rng& rng);
PureState random_state(int n, std::uint64_t seed);

/// 2x2 operator with i.i.d. standard complex normal entries, rescaled so the
/// largest |entry| is 1, resampled until |det| >= 0.1. The floor keeps
/// SLOCC covariance checks well-conditioned.
LocalOperator random_invertible(Rng& rng);
LocalOperator random_invertible(std::uint64_t seed);

/// random_invertible rescaled to determinant exactly 1.
LocalOperator random_special(Rng& rng);

/// Haar-random SU(2) element times a uniform phase (a 2x2 unitary with
/// |det| = 1).
LocalOperator random_unitary(Rng& rng);

LocalOperatorChain random_invertible_chain(int n, Rng& rng);
LocalOperatorChain random_special_chain(int n, Rng& rng);
LocalOperatorChain random_unitary_chain(int n, Rng& rng);

} // namespace qinv
