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
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "qinv/density.hpp"
#include "qinv/measure.hpp"
#include "qinv/roof.hpp"
#include "qinv/named_states.hpp"
#include "qinv/random.hpp"
#include "qinv/state.hpp"

using qinv::cplx;
using qinv::DensityMatrix;
using qinv::PureState;
using qinv::random_state;
using qinv::StateEnsemble;
using namespace qinv::measure;

namespace {

StateEnsemble two_state_mix(double w, const PureState& a, const PureState& b) {
    return StateEnsemble({{w, a}, {1.0 - w, b}});
}

double max_entry_diff(const DensityMatrix& a, const DensityMatrix& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
    }
    return worst;
}

} // namespace

TEST_CASE("density matrix construction validates structure") {
    SUBCASE("a pure projector passes") {
        const PureState psi = random_state(2, 1);
        const DensityMatrix rho = density_of(StateEnsemble({{1.0, psi}}));
        CHECK(rho.qubit_count() == 2);
        CHECK(rho.dim() == 4);
        CHECK(std::abs(rho.entry(0, 0) - psi.amp(0) * std::conj(psi.amp(0))) < 1e-15);
    }
    SUBCASE("wrong entry count") {
        CHECK_THROWS_AS(DensityMatrix(2, std::vector<cplx>(8)), qinv::input_error);
    }
    SUBCASE("non-Hermitian") {
        std::vector<cplx> m(4, 0.0);
        m[0] = 0.5;
        m[3] = 0.5;
        m[1] = 0.2; // m[2] stays 0, breaking the symmetry
        CHECK_THROWS_AS(DensityMatrix(1, m), qinv::input_error);
    }
    SUBCASE("trace away from one") {
        std::vector<cplx> m(4, 0.0);
        m[0] = 0.7;
        m[3] = 0.7;
        CHECK_THROWS_AS(DensityMatrix(1, m), qinv::input_error);
    }
    SUBCASE("negative eigenvalue is caught at decomposition") {
        std::vector<cplx> m(4, 0.0);
        m[0] = 1.001;
        m[3] = -0.001;
        const DensityMatrix rho(1, m);
        CHECK_THROWS_AS(eigen_ensemble(rho), qinv::input_error);
    }
}

TEST_CASE("eigen decomposition round-trips") {
    SUBCASE("a pure density recovers its state") {
        const PureState psi = random_state(4, 2);
        const StateEnsemble out = eigen_ensemble(density_of(StateEnsemble({{1.0, psi}})));
        REQUIRE(out.size() == 1);
        CHECK(out.member(0).weight == doctest::Approx(1.0).epsilon(1e-12));
        // Equal up to a global phase: overlap magnitude 1.
        cplx overlap = 0.0;
        for (std::size_t i = 0; i < psi.dim(); ++i) {
            overlap += std::conj(out.member(0).state.amp(i)) * psi.amp(i);
        }
        CHECK(std::abs(overlap) == doctest::Approx(1.0).epsilon(1e-10));
    }
    SUBCASE("density_of after eigen_ensemble reproduces rho") {
        const StateEnsemble mix = two_state_mix(0.3, random_state(3, 3), random_state(3, 4));
        const DensityMatrix rho = density_of(mix);
        CHECK(max_entry_diff(rho, density_of(eigen_ensemble(rho))) < 1e-12);
    }
}

TEST_CASE("roof of a pure state is the pure measure") {
    for (std::uint64_t seed : {11u, 12u, 13u}) {
        const PureState psi = random_state(4, seed);
        RoofConfig cfg;
        cfg.restarts = 4;
        const RoofResult r = convex_roof(StateEnsemble({{1.0, psi}}), cfg);
        CAPTURE(seed);
        CHECK(std::abs(r.estimate - p_measure(psi).value) < 1e-10);
    }
}

TEST_CASE("ghz-w mixtures have zero roof") {
    const PureState ghz = qinv::make_ghz(4);
    const PureState w = qinv::make_w(4);
    for (double weight : {0.25, 0.5, 0.75}) {
        RoofConfig cfg;
        cfg.restarts = 6;
        const RoofResult r = convex_roof(two_state_mix(weight, ghz, w), cfg);
        CAPTURE(weight);
        CHECK(r.estimate <= 1e-10);
    }
}

TEST_CASE("roof output is consistent and bounded") {
    const StateEnsemble mix = two_state_mix(0.6, random_state(4, 21), random_state(4, 22));
    RoofConfig cfg;
    cfg.restarts = 8;
    cfg.seed = 5;
    const RoofResult r = convex_roof(mix, cfg);
    SUBCASE("estimate never exceeds the eigen-ensemble average") {
        CHECK(r.estimate <= r.eigen_average + 1e-12);
    }
    SUBCASE("the reported ensemble reproduces the estimate") {
        double avg = 0.0;
        for (const auto& m : r.ensemble.members()) {
            avg += m.weight * p_measure(m.state).value;
        }
        CHECK(std::abs(avg - r.estimate) < 1e-12);
    }
    SUBCASE("the reported ensemble reconstructs rho") {
        CHECK(max_entry_diff(density_of(mix), density_of(r.ensemble)) < 1e-9);
    }
    SUBCASE("fixed seeds reproduce") {
        const RoofResult again = convex_roof(mix, cfg);
        CHECK(again.estimate == r.estimate);
        CHECK(again.restarts_converged == r.restarts_converged);
    }
}

TEST_CASE("more restarts never hurt") {
    const StateEnsemble mix = two_state_mix(0.5, random_state(4, 31), qinv::make_cl2(4));
    RoofConfig few;
    few.restarts = 2;
    few.seed = 9;
    RoofConfig many = few;
    many.restarts = 8;
    const double low = convex_roof(mix, few).estimate;
    const double high = convex_roof(mix, many).estimate;
    CHECK(high <= low + 1e-12);
}

TEST_CASE("roof accepts a density matrix directly") {
    const StateEnsemble mix = two_state_mix(0.4, random_state(4, 41), random_state(4, 42));
    RoofConfig cfg;
    cfg.restarts = 4;
    cfg.seed = 3;
    const RoofResult via_rho = convex_roof(density_of(mix), cfg);
    CHECK(via_rho.estimate <= via_rho.eigen_average + 1e-12);
    CHECK(max_entry_diff(density_of(mix), density_of(via_rho.ensemble)) < 1e-9);
}

TEST_CASE("roof validates configuration and arity") {
    const StateEnsemble pure4 = StateEnsemble({{1.0, qinv::make_ghz(4)}});
    RoofConfig bad;
    bad.restarts = 0;
    CHECK_THROWS_AS(convex_roof(pure4, bad), qinv::param_error);
    RoofConfig tight;
    tight.decomposition_size = 1;
    const StateEnsemble rank2 = two_state_mix(0.5, qinv::make_ghz(4), qinv::make_w(4));
    CHECK_THROWS_AS(convex_roof(rank2, tight), qinv::param_error);
    CHECK_THROWS_AS(convex_roof(StateEnsemble({{1.0, qinv::make_ghz(2)}}), {}),
                    qinv::arity_error);
    CHECK_THROWS_AS(convex_roof(StateEnsemble({{1.0, random_state(5, 43)}}), {}),
                    qinv::arity_error);
}
