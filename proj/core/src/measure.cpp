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
#include "qinv/measure.hpp"

#include <cmath>
#include <sstream>

#include "qinv/classify.hpp"
#include "qinv/random.hpp"

namespace qinv::measure {

MeasureValue p_measure(const PureState& state) {
    const int n = state.qubit_count();
    if (n % 2 != 0 || n < 4) {
        throw arity_error("the degree-4 measure requires even n >= 4, got n=" +
                          std::to_string(n));
    }
    if (!state.is_normalized()) {
        throw normalization_error(
            "the degree-4 measure requires a unit-normalized state (|P_n| scales with the "
            "fourth power of the norm)");
    }
    invariants::InvariantValue p = invariants::pn_product_form(state);
    return {std::abs(p.value), std::move(p)};
}

PureState product_state(const PureState& phi, const PureState& omega) {
    const int n = phi.qubit_count() + omega.qubit_count();
    if (n > PureState::max_qubits) {
        throw param_error("product state would exceed " +
                          std::to_string(PureState::max_qubits) + " qubits");
    }
    const std::size_t low_dim = omega.dim();
    std::vector<cplx> amps(phi.dim() * low_dim);
    for (std::size_t i = 0; i < phi.dim(); ++i) {
        const cplx a = phi.amp(i);
        for (std::size_t j = 0; j < low_dim; ++j) {
            amps[i * low_dim + j] = a * omega.amp(j);
        }
    }
    return PureState(n, std::move(amps));
}

CheckReport check_product_rules(int n, int trials, std::uint64_t seed) {
    if (n % 2 != 0 || n < 4) {
        throw arity_error("product rules apply to even n >= 4, got n=" + std::to_string(n));
    }
    CheckReport report;
    report.name = "product-rules";
    const classify::ZeroTolerance zero;
    for (int t = 0; t < trials; ++t) {
        for (int l = 1; l <= n - 2; ++l) {
            Rng rng(mix_seed(seed, static_cast<std::uint64_t>(t) * 64 +
                                       static_cast<std::uint64_t>(l)));
            const PureState phi = random_state(l, rng);
            const PureState omega = random_state(n - l, rng);
            const invariants::InvariantValue p =
                invariants::pn_product_form(product_state(phi, omega));
            std::ostringstream os;
            os << "product-rules: n=" << n << " l=" << l << " trial=" << t;
            if (l % 2 == 1) {
                // Odd-l factor states make the whole invariant vanish.
                const double limit = zero.absolute_floor + zero.relative_factor * p.scale;
                os << " |P_n|=" << std::abs(p.value);
                report.record(std::abs(p.value), limit, os.str());
                continue;
            }
            const double c_omega = invariants::concurrence(omega);
            double expected = 0.0;
            if (l == 2) {
                const double c_phi = invariants::concurrence(phi);
                expected = 0.125 * c_phi * c_phi * c_omega * c_omega;
            } else {
                expected = std::abs(invariants::pn_product_form(phi).value) * c_omega * c_omega;
            }
            const double err = relative_error(std::abs(p.value), expected);
            os << " rel_err=" << err;
            report.record(err, 1e-8, os.str());
        }
    }
    return report;
}

CheckReport lu_invariance_check(const PureState& state, int trials, std::uint64_t seed) {
    const int n = state.qubit_count();
    CheckReport report;
    report.name = "lu-invariance";
    const invariants::InvariantValue base = invariants::pn_product_form(state);
    const classify::ZeroTolerance zero;
    const bool base_zero = zero.is_zero(base);
    const double reference = std::abs(base.value);
    const auto check_one = [&](const char* kind, const LocalOperatorChain& chain, int t) {
        const invariants::InvariantValue moved =
            invariants::pn_product_form(apply_chain(state, chain));
        std::ostringstream os;
        os << "lu-invariance: " << kind << " chain trial=" << t;
        if (base_zero) {
            // A vanishing invariant must stay below threshold, not track a
            // meaningless relative error against zero.
            const double limit = zero.absolute_floor + zero.relative_factor * moved.scale;
            os << " |P_n|=" << std::abs(moved.value);
            report.record(std::abs(moved.value), limit, os.str());
            return;
        }
        const double err = relative_error(std::abs(moved.value), reference);
        os << " rel_err=" << err;
        report.record(err, 1e-9, os.str());
    };
    for (int t = 0; t < trials; ++t) {
        Rng rng(mix_seed(seed, static_cast<std::uint64_t>(t)));
        check_one("det-1", random_special_chain(n, rng), t);
        check_one("unitary", random_unitary_chain(n, rng), t);
    }
    return report;
}

CheckReport check_bound(int n, int trials, std::uint64_t seed) {
    CheckReport report;
    report.name = "bound";
    for (int t = 0; t < trials; ++t) {
        const PureState psi = random_state(n, mix_seed(seed, static_cast<std::uint64_t>(t)));
        const double v = p_measure(psi).value;
        const double violation = std::max(0.0, std::max(-v, v - 1.0));
        std::ostringstream os;
        os << "bound: n=" << n << " trial=" << t << " |P_n|=" << v;
        report.record(violation, 0.0, os.str());
    }
    return report;
}

} // namespace qinv::measure
