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
#include "qinv/density.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace qinv {

namespace {

constexpr double structure_tol = 1e-9;   // Hermiticity and trace
constexpr double eigenvalue_cutoff = 1e-12;

} // namespace

DensityMatrix::DensityMatrix(int n, std::vector<cplx> entries)
    : n_(n), dim_(std::size_t{1} << (n > 0 ? n : 0)), entries_(std::move(entries)) {
    if (n_ < 1 || n_ > PureState::max_qubits) {
        throw input_error("density matrix qubit count out of range");
    }
    if (entries_.size() != dim_ * dim_) {
        throw input_error("density matrix must have 4^n entries");
    }
    double trace = 0.0;
    double worst_hermiticity = 0.0;
    for (std::size_t r = 0; r < dim_; ++r) {
        const cplx diag = entries_[r * dim_ + r];
        trace += diag.real();
        worst_hermiticity = std::max(worst_hermiticity, std::abs(diag.imag()));
        for (std::size_t c = r + 1; c < dim_; ++c) {
            const cplx upper = entries_[r * dim_ + c];
            const cplx lower = entries_[c * dim_ + r];
            if (!std::isfinite(upper.real()) || !std::isfinite(upper.imag())) {
                throw input_error("density matrix has a non-finite entry");
            }
            worst_hermiticity = std::max(worst_hermiticity, std::abs(upper - std::conj(lower)));
        }
    }
    if (worst_hermiticity > structure_tol) {
        throw input_error("density matrix is not Hermitian within 1e-9");
    }
    if (std::abs(trace - 1.0) > structure_tol) {
        throw input_error("density matrix trace differs from 1 by more than 1e-9");
    }
}

StateEnsemble eigen_ensemble(const DensityMatrix& rho) {
    const auto dim = static_cast<Eigen::Index>(rho.dim());
    Eigen::MatrixXcd m(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
        for (Eigen::Index c = 0; c < dim; ++c) {
            m(r, c) = rho.entry(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
    if (solver.info() != Eigen::Success) {
        throw input_error("density matrix eigendecomposition failed");
    }
    std::vector<StateEnsemble::Member> members;
    double total = 0.0;
    for (Eigen::Index k = 0; k < dim; ++k) {
        const double lambda = solver.eigenvalues()(k);
        if (lambda < -structure_tol) {
            throw input_error("density matrix is not positive semidefinite");
        }
        if (lambda < eigenvalue_cutoff) {
            continue;
        }
        std::vector<cplx> amps(static_cast<std::size_t>(dim));
        for (Eigen::Index i = 0; i < dim; ++i) {
            amps[static_cast<std::size_t>(i)] = solver.eigenvectors()(i, k);
        }
        members.push_back({lambda, PureState(rho.qubit_count(), std::move(amps)).normalized()});
        total += lambda;
    }
    if (members.empty()) {
        throw input_error("density matrix has no eigenvalue above the 1e-12 cutoff");
    }
    // The discarded tail is bounded by the trace tolerance; fold it back so
    // the ensemble weights sum to 1 exactly.
    for (StateEnsemble::Member& member : members) {
        member.weight /= total;
    }
    return StateEnsemble(std::move(members));
}

DensityMatrix density_of(const StateEnsemble& ensemble) {
    const std::size_t dim = std::size_t{1} << ensemble.qubit_count();
    std::vector<cplx> entries(dim * dim, cplx{});
    for (const StateEnsemble::Member& member : ensemble.members()) {
        for (std::size_t r = 0; r < dim; ++r) {
            const cplx wr = member.weight * member.state.amp(r);
            for (std::size_t c = 0; c < dim; ++c) {
                entries[r * dim + c] += wr * std::conj(member.state.amp(c));
            }
        }
    }
    return DensityMatrix(ensemble.qubit_count(), std::move(entries));
}

} // namespace qinv
