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

#include "qinv/invariants.hpp"
#include "qinv/report.hpp"
#include "qinv/state.hpp"

namespace qinv::measure {

/// |P_n| of a unit-normalized state, together with the underlying invariant
/// evaluation. In [0, 1] for unit input.
struct MeasureValue {
    double value;
    invariants::InvariantValue source;
};

/// Degree-4 entanglement measure |P_n|. Requires even n >= 4 and a
/// unit-normalized state: |P_n(c psi)| = |c|^4 |P_n(psi)|, so the measure
/// only makes sense at norm 1 (arity and normalization failures raise
/// distinct error types).
MeasureValue p_measure(const PureState& state);

/// Tensor product; phi owns the most significant index bits (qubits
/// 1 ... l of the result), omega the rest.
PureState product_state(const PureState& phi, const PureState& omega);

/// Randomized suite of the product laws on |phi>_l (x) |omega>_{n-l}:
///   l = 2:         |P_n| = 1/8 C_2(phi)^2 C_{n-2}(omega)^2
///   even l >= 4:   |P_n| = |P_l(phi)| C_{n-l}(omega)^2
///   odd l:         |P_n| below the zero threshold
/// within relative 1e-8, over all l in {1, ..., n-2} feasible for n.
CheckReport check_product_rules(int n, int trials, std::uint64_t seed);

/// Randomized suite: |P_n| of the given state is unchanged by random
/// determinant-1 chains and by random local-unitary chains, relative 1e-9.
CheckReport lu_invariance_check(const PureState& state, int trials, std::uint64_t seed);

/// Randomized suite: 0 <= |P_n| <= 1 over random unit states.
CheckReport check_bound(int n, int trials, std::uint64_t seed);

} // namespace qinv::measure
