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

#include "qinv/density.hpp"
#include "qinv/state.hpp"

namespace qinv::measure {

/// Search budget for the convex-roof minimization.
struct RoofConfig {
    /// Decomposition size m; 0 means 2 * rank(rho). Must be >= rank.
    int decomposition_size = 0;
    int restarts = 16;
    int max_iterations = 400;
    /// A restart counts as converged when its last step-size shrink leaves
    /// improvements below this.
    double tolerance = 1e-8;
    std::uint64_t seed = 0;
};

/// Upper-bound estimate of tau(rho) = min over decompositions of
/// sum_i p_i |P_n(psi_i)|, with the decomposition that achieved it.
struct RoofResult {
    double estimate = 0.0;
    StateEnsemble ensemble;
    int restarts_converged = 0;
    /// sum p_i |P_n| of the eigen-decomposition, the baseline the estimate
    /// never exceeds.
    double eigen_average = 0.0;
};

/// Minimizes the average measure over size-m decompositions of rho. Every
/// decomposition of rho arises from an isometry applied to the weighted
/// eigenvectors, so the search moves over column-orthonormal m x r matrices
/// (re-orthonormalized after every proposal) by derivative-free adaptive
/// random steps, restarted cfg.restarts times. Restart 0 starts at the
/// eigen-decomposition itself, and for ensemble input the input is also a
/// candidate, so the estimate never exceeds either average; it is an UPPER
/// BOUND on tau(rho), not a certified minimum. Deterministic for a fixed
/// seed; restarts own independent substreams and may run in any order.
/// Supports at most 12 qubits: the search goes through the dense spectral
/// decomposition of rho.
RoofResult convex_roof(const StateEnsemble& ensemble, const RoofConfig& cfg = {});
RoofResult convex_roof(const DensityMatrix& rho, const RoofConfig& cfg = {});

} // namespace qinv::measure
