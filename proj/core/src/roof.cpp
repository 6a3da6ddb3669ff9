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
#include "qinv/roof.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <utility>
#include <vector>

#include "qinv/invariants.hpp"
#include "qinv/measure.hpp"
#include "qinv/random.hpp"

namespace qinv::measure {

namespace {

constexpr int max_roof_qubits = 12;
constexpr double weight_cutoff = 1e-14;
constexpr double initial_step = 0.3;

// p_i |P_n(psi_i)| for the unnormalized column w with p_i = |w|^2: by
// degree-4 homogeneity this is |P_n(w)| / |w|^2, with no normalization pass.
double column_contribution(int n, const Eigen::MatrixXcd& rows, Eigen::Index i) {
    const double weight = rows.row(i).squaredNorm();
    if (weight < 1e-30) {
        return 0.0;
    }
    std::vector<cplx> amps(static_cast<std::size_t>(rows.cols()));
    for (Eigen::Index j = 0; j < rows.cols(); ++j) {
        amps[static_cast<std::size_t>(j)] = rows(i, j);
    }
    return std::abs(invariants::pn_product_form(PureState(n, std::move(amps))).value) / weight;
}

// Average measure of the decomposition rows W = U B.
double objective(int n, const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& basis) {
    const Eigen::MatrixXcd rows = u * basis;
    double total = 0.0;
    for (Eigen::Index i = 0; i < rows.rows(); ++i) {
        total += column_contribution(n, rows, i);
    }
    return total;
}

Eigen::MatrixXcd orthonormal_columns(const Eigen::MatrixXcd& m) {
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(m);
    return qr.householderQ() * Eigen::MatrixXcd::Identity(m.rows(), m.cols());
}

Eigen::MatrixXcd gaussian_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols) {
    std::normal_distribution<double> dist(0.0, 1.0);
    Eigen::MatrixXcd g(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        for (Eigen::Index c = 0; c < cols; ++c) {
            const double re = dist(rng);
            const double im = dist(rng);
            g(r, c) = cplx(re, im);
        }
    }
    return g;
}

double ensemble_average(const StateEnsemble& ensemble) {
    double total = 0.0;
    for (const StateEnsemble::Member& member : ensemble.members()) {
        total += member.weight * p_measure(member.state).value;
    }
    return total;
}

// Reads the decomposition W = U B back as an ensemble, dropping columns of
// negligible weight and renormalizing the rest.
StateEnsemble materialize(int n, const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& basis) {
    const Eigen::MatrixXcd rows = u * basis;
    std::vector<StateEnsemble::Member> members;
    double total = 0.0;
    for (Eigen::Index i = 0; i < rows.rows(); ++i) {
        const double weight = rows.row(i).squaredNorm();
        if (weight <= weight_cutoff) {
            continue;
        }
        std::vector<cplx> amps(static_cast<std::size_t>(rows.cols()));
        for (Eigen::Index j = 0; j < rows.cols(); ++j) {
            amps[static_cast<std::size_t>(j)] = rows(i, j);
        }
        members.push_back({weight, PureState(n, std::move(amps)).normalized()});
        total += weight;
    }
    for (StateEnsemble::Member& member : members) {
        member.weight /= total;
    }
    return StateEnsemble(std::move(members));
}

void check_roof_arity(int n) {
    if (n % 2 != 0 || n < 4) {
        throw arity_error("the roof of |P_n| needs an even qubit count of at least 4");
    }
    if (n > max_roof_qubits) {
        throw param_error("convex roof supports at most 12 qubits");
    }
}

RoofResult run_roof(const StateEnsemble& eigen_decomp, const StateEnsemble* input,
                    const RoofConfig& cfg) {
    const int n = eigen_decomp.qubit_count();
    if (cfg.restarts < 1 || cfg.max_iterations < 1) {
        throw param_error("roof restarts and iterations must be positive");
    }
    if (!(cfg.tolerance > 0.0)) {
        throw param_error("roof tolerance must be positive");
    }
    const auto rank = static_cast<Eigen::Index>(eigen_decomp.size());
    const Eigen::Index m =
        cfg.decomposition_size == 0 ? 2 * rank : static_cast<Eigen::Index>(cfg.decomposition_size);
    if (m < rank) {
        throw param_error("decomposition size must be at least the rank of rho");
    }

    const auto dim = static_cast<Eigen::Index>(eigen_decomp.member(0).state.dim());
    Eigen::MatrixXcd basis(rank, dim);
    for (Eigen::Index k = 0; k < rank; ++k) {
        const StateEnsemble::Member& member = eigen_decomp.member(static_cast<std::size_t>(k));
        const double root = std::sqrt(member.weight);
        for (Eigen::Index j = 0; j < dim; ++j) {
            basis(k, j) = root * member.state.amp(static_cast<std::size_t>(j));
        }
    }

    const double eigen_average = ensemble_average(eigen_decomp);

    double best_value = std::numeric_limits<double>::infinity();
    Eigen::MatrixXcd best_u;
    int converged = 0;
    for (int restart = 0; restart < cfg.restarts; ++restart) {
        Rng rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(restart)));
        Eigen::MatrixXcd u = restart == 0
                                 ? Eigen::MatrixXcd(Eigen::MatrixXcd::Identity(m, rank))
                                 : orthonormal_columns(gaussian_matrix(rng, m, rank));
        double local_best = objective(n, u, basis);
        double step = initial_step;
        for (int iter = 0; iter < cfg.max_iterations; ++iter) {
            const Eigen::MatrixXcd candidate =
                orthonormal_columns(u + step * gaussian_matrix(rng, m, rank));
            const double value = objective(n, candidate, basis);
            if (value < local_best) {
                local_best = value;
                u = candidate;
                step = std::min(step * 1.5, 1.0);
            } else {
                step *= 0.7;
                if (step < cfg.tolerance) {
                    ++converged;
                    break;
                }
            }
        }
        if (local_best < best_value) {
            best_value = local_best;
            best_u = u;
        }
    }

    // Report the estimate of the ensemble actually returned, then fall back
    // to the eigen-decomposition or the input if either average is lower.
    StateEnsemble out = materialize(n, best_u, basis);
    double estimate = ensemble_average(out);
    if (eigen_average < estimate) {
        estimate = eigen_average;
        out = eigen_decomp;
    }
    if (input != nullptr) {
        const double input_average = ensemble_average(*input);
        if (input_average < estimate) {
            estimate = input_average;
            out = *input;
        }
    }
    return RoofResult{estimate, std::move(out), converged, eigen_average};
}

} // namespace

RoofResult convex_roof(const StateEnsemble& ensemble, const RoofConfig& cfg) {
    check_roof_arity(ensemble.qubit_count());
    const StateEnsemble eigen_decomp = eigen_ensemble(density_of(ensemble));
    return run_roof(eigen_decomp, &ensemble, cfg);
}

RoofResult convex_roof(const DensityMatrix& rho, const RoofConfig& cfg) {
    check_roof_arity(rho.qubit_count());
    return run_roof(eigen_ensemble(rho), nullptr, cfg);
}

} // namespace qinv::measure
