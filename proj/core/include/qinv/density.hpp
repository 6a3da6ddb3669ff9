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

#include <vector>

#include "qinv/state.hpp"

namespace qinv {

/// Dense n-qubit density matrix, row-major 2^n x 2^n. Construction checks
/// shape, Hermiticity and unit trace (both within 1e-9) but not positivity;
/// eigen_ensemble rejects matrices with an eigenvalue below -1e-9.
class DensityMatrix {
  public:
    DensityMatrix(int n, std::vector<cplx> entries);

    int qubit_count() const { return n_; }
    std::size_t dim() const { return dim_; }
    std::span<const cplx> entries() const { return entries_; }
    cplx entry(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }

  private:
    int n_;
    std::size_t dim_;
    std::vector<cplx> entries_;
};

/// Spectral decomposition as an ensemble: eigenvalues below 1e-12 are
/// discarded and the surviving weights renormalized to sum to exactly 1
/// (the trace check already bounds the discarded mass by 1e-9).
StateEnsemble eigen_ensemble(const DensityMatrix& rho);

/// sum_i p_i |psi_i><psi_i| of the ensemble.
DensityMatrix density_of(const StateEnsemble& ensemble);

} // namespace qinv
