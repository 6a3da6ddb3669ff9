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
#include <limits>
#include <vector>

#include "doctest.h"

#include "qinv/named_states.hpp"
#include "qinv/random.hpp"
#include "qinv/state.hpp"

using namespace qinv;

namespace {

PureState basis_state(int n, std::size_t index) {
    std::vector<cplx> amps(std::size_t{1} << n, cplx{});
    amps[index] = 1.0;
    return PureState(n, std::move(amps));
}

double max_amp_diff(const PureState& a, const PureState& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        worst = std::max(worst, std::abs(a.amp(i) - b.amp(i)));
    }
    return worst;
}

const LocalOperator pauli_x{0.0, 1.0, 1.0, 0.0};

} // namespace

TEST_CASE("pure state construction validates its input") {
    CHECK_THROWS_AS(PureState(2, std::vector<cplx>(3)), param_error);
    CHECK_THROWS_AS(PureState(0, std::vector<cplx>(1)), param_error);
    CHECK_THROWS_AS(PureState(31, std::vector<cplx>(8)), param_error);
    std::vector<cplx> bad(4);
    bad[1] = cplx(std::numeric_limits<double>::quiet_NaN(), 0.0);
    CHECK_THROWS_AS(PureState(2, bad), param_error);

    const PureState ghz = make_ghz(3);
    CHECK(ghz.dim() == 8);
    CHECK(ghz.norm_sq() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(ghz.is_normalized());

    std::vector<cplx> scaled(4, cplx{});
    scaled[0] = 2.0;
    const PureState unnormalized(2, scaled);
    CHECK_FALSE(unnormalized.is_normalized());
    CHECK(unnormalized.normalized().is_normalized());
    CHECK_THROWS_AS(PureState(1, std::vector<cplx>(2)).normalized(), param_error);
}

TEST_CASE("qubit 1 owns the most significant index bit") {
    // X on qubit 1 of |000> flips the 2^2 bit, X on qubit 3 the 2^0 bit.
    const PureState zero = basis_state(3, 0);
    CHECK(std::abs(apply_single(zero, 1, pauli_x).amp(4)) == doctest::Approx(1.0));
    CHECK(std::abs(apply_single(zero, 3, pauli_x).amp(1)) == doctest::Approx(1.0));
    CHECK(std::abs(apply_single(zero, 2, pauli_x).amp(2)) == doctest::Approx(1.0));

    const LocalOperator scale2{2.0, 0.0, 0.0, 1.0}; // |0> -> 2|0> on the acted qubit
    const PureState e2 = basis_state(3, 2);         // bits 010: qubit 2 is |1>
    CHECK(std::abs(apply_single(e2, 2, LocalOperator{1.0, 0.0, 0.0, 2.0}).amp(2)) ==
          doctest::Approx(2.0));
    CHECK(std::abs(apply_single(e2, 1, scale2).amp(2)) == doctest::Approx(2.0));

    CHECK_THROWS_AS(apply_single(zero, 0, pauli_x), param_error);
    CHECK_THROWS_AS(apply_single(zero, 4, pauli_x), param_error);
}

TEST_CASE("chains act one operator per qubit") {
    const PureState zero = basis_state(2, 0);
    const LocalOperatorChain first({pauli_x, LocalOperator::identity()});
    const LocalOperatorChain second({LocalOperator::identity(), pauli_x});
    CHECK(std::abs(apply_chain(zero, first).amp(2)) == doctest::Approx(1.0));
    CHECK(std::abs(apply_chain(zero, second).amp(1)) == doctest::Approx(1.0));
    CHECK_THROWS_AS(apply_chain(zero, LocalOperatorChain::identity(3)), param_error);

    Rng rng(5);
    const PureState psi = random_state(4, rng);
    const PureState moved = apply_chain(psi, random_unitary_chain(4, rng));
    CHECK(moved.norm_sq() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("local operator determinant helpers") {
    const LocalOperator a{1.0, 2.0, 3.0, 4.0};
    CHECK(a.det() == cplx(-2.0, 0.0));
    const LocalOperator unit = a.unit_determinant();
    CHECK(std::abs(unit.det() - 1.0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK_THROWS_AS((LocalOperator{1.0, 2.0, 2.0, 4.0}.unit_determinant()), param_error);

    Rng rng(9);
    const LocalOperatorChain chain = random_invertible_chain(3, rng);
    cplx product = 1.0;
    for (const LocalOperator& op : chain.ops()) {
        product *= op.det();
    }
    CHECK(std::abs(chain.det_product() - product) < 1e-14);
    CHECK(std::abs(chain.unit_determinant().det_product() - 1.0) < 1e-12);
}

TEST_CASE("qubit permutation algebra") {
    CHECK_THROWS_AS(QubitPermutation({1, 1}), param_error);
    CHECK_THROWS_AS(QubitPermutation({0, 1}), param_error);
    CHECK_THROWS_AS(QubitPermutation::transposition(4, 2, 2), param_error);
    CHECK_THROWS_AS(QubitPermutation::transposition(4, 0, 3), param_error);

    const auto id = QubitPermutation::identity(4);
    CHECK(id.is_identity());
    CHECK(id.to_string() == "id");

    const auto t13 = QubitPermutation::transposition(4, 1, 3);
    CHECK(t13(1) == 3);
    CHECK(t13(3) == 1);
    CHECK(t13(2) == 2);
    CHECK(t13.to_string() == "(1,3)");
    CHECK(t13.compose(t13).is_identity());
    CHECK(t13.inverse() == t13);

    const QubitPermutation cyc({2, 3, 1}); // 1->2, 2->3, 3->1
    CHECK(cyc.to_string() == "[2 3 1]");
    CHECK(cyc.compose(cyc.inverse()).is_identity());
    const auto t12 = QubitPermutation::transposition(3, 1, 2);
    // (cyc.compose(t12))(i) = cyc(t12(i))
    CHECK(cyc.compose(t12)(1) == 3);
    CHECK(cyc.compose(t12)(2) == 2);
    CHECK_THROWS_AS(cyc.compose(QubitPermutation::identity(4)), param_error);
}

TEST_CASE("apply_permutation relabels qubits") {
    // Swapping qubits 1 and 3 moves the excitation |001> -> |100>.
    const PureState e1 = basis_state(3, 1);
    const auto t13 = QubitPermutation::transposition(3, 1, 3);
    CHECK(std::abs(apply_permutation(e1, t13).amp(4)) == doctest::Approx(1.0));

    Rng rng(31);
    const PureState psi = random_state(4, rng);

    SUBCASE("composition law") {
        const auto sigma = QubitPermutation({2, 4, 1, 3});
        const auto tau = QubitPermutation::transposition(4, 1, 4);
        const PureState lhs = apply_permutation(apply_permutation(psi, tau), sigma);
        const PureState rhs = apply_permutation(psi, sigma.compose(tau));
        CHECK(max_amp_diff(lhs, rhs) == 0.0);
    }
    SUBCASE("inverse round trip") {
        const auto sigma = QubitPermutation({3, 1, 4, 2});
        const PureState back = apply_permutation(apply_permutation(psi, sigma), sigma.inverse());
        CHECK(max_amp_diff(back, psi) == 0.0);
    }
    SUBCASE("symmetric states are fixed points") {
        for (const PureState& state : {make_ghz(4), make_w(4), make_dicke(4, 2)}) {
            for (int i = 1; i <= 4; ++i) {
                for (int j = i + 1; j <= 4; ++j) {
                    const auto t = QubitPermutation::transposition(4, i, j);
                    CHECK(max_amp_diff(apply_permutation(state, t), state) == 0.0);
                }
            }
        }
    }
    SUBCASE("size mismatch") {
        CHECK_THROWS_AS(apply_permutation(psi, QubitPermutation::identity(3)), param_error);
    }
}

TEST_CASE("state ensembles validate weights and members") {
    const PureState ghz = make_ghz(2);
    CHECK_THROWS_AS(StateEnsemble({}), param_error);
    CHECK_THROWS_AS(StateEnsemble({{0.5, ghz}}), param_error);
    CHECK_THROWS_AS(StateEnsemble({{-0.1, ghz}, {1.1, ghz}}), param_error);
    CHECK_THROWS_AS(StateEnsemble({{0.5, ghz}, {0.5, make_w(3)}}), param_error);

    std::vector<cplx> big(4, cplx{});
    big[0] = 2.0;
    CHECK_THROWS_AS(StateEnsemble({{1.0, PureState(2, big)}}), normalization_error);

    const StateEnsemble mix({{0.25, ghz}, {0.75, make_w(2)}});
    CHECK(mix.size() == 2);
    CHECK(mix.qubit_count() == 2);
    CHECK(mix.member(1).weight == doctest::Approx(0.75));
}

TEST_CASE("named states") {
    for (int n : {2, 3, 4, 6}) {
        CHECK(make_ghz(n).norm_sq() == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(make_w(n).norm_sq() == doctest::Approx(1.0).epsilon(1e-14));
    }
    for (int n : {4, 6, 8}) {
        CHECK(make_dicke(n, n / 2).norm_sq() == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(make_cl1(n).norm_sq() == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(make_cl2(n).norm_sq() == doctest::Approx(1.0).epsilon(1e-14));
    }

    const PureState ghz = make_ghz(2);
    CHECK(ghz.amp(0).real() == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(ghz.amp(3).real() == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(std::abs(ghz.amp(1)) == 0.0);

    const PureState dicke = make_dicke(4, 2);
    for (std::size_t i = 0; i < dicke.dim(); ++i) {
        const int pop = __builtin_popcountll(i);
        if (pop == 2) {
            CHECK(dicke.amp(i).real() == doctest::Approx(1.0 / std::sqrt(6.0)));
        } else {
            CHECK(std::abs(dicke.amp(i)) == 0.0);
        }
    }

    const PureState cl1 = make_cl1(4);
    CHECK(cl1.amp(0).real() == doctest::Approx(0.5));
    CHECK(cl1.amp(3).real() == doctest::Approx(0.5));
    CHECK(cl1.amp(12).real() == doctest::Approx(0.5));
    CHECK(cl1.amp(15).real() == doctest::Approx(-0.5));

    const PureState cl2 = make_cl2(4);
    CHECK(cl2.amp(0).real() == doctest::Approx(0.5));
    CHECK(cl2.amp(5).real() == doctest::Approx(0.5));
    CHECK(cl2.amp(10).real() == doctest::Approx(0.5));
    CHECK(cl2.amp(15).real() == doctest::Approx(-0.5));

    CHECK_THROWS_AS(make_dicke(4, 5), param_error);
    CHECK_THROWS_AS(make_cl1(5), param_error);
    CHECK_THROWS_AS(make_ghz(1), param_error);
}

TEST_CASE("named state selectors parse") {
    CHECK(parse_named("ghz").kind == NamedKind::ghz);
    CHECK(parse_named("W").kind == NamedKind::w);
    CHECK(parse_named("CL1").kind == NamedKind::cl1);
    CHECK(parse_named("cl2").kind == NamedKind::cl2);
    const NamedSpec dicke = parse_named("dicke:3");
    CHECK(dicke.kind == NamedKind::dicke);
    CHECK(dicke.k == 3);
    CHECK_THROWS_AS(parse_named("bell"), param_error);
    CHECK_THROWS_AS(parse_named("dicke:x"), param_error);
    CHECK_THROWS_AS(parse_named("dicke"), param_error);
    CHECK(to_string(NamedKind::ghz) == "ghz");
    CHECK(to_string(NamedKind::dicke) == "dicke");
}

TEST_CASE("random sources are deterministic and constrained") {
    CHECK(mix_seed(0, 0) != mix_seed(0, 1));
    CHECK(mix_seed(0, 0) != mix_seed(1, 0));

    const PureState a = random_state(4, std::uint64_t{42});
    const PureState b = random_state(4, std::uint64_t{42});
    const PureState c = random_state(4, std::uint64_t{43});
    CHECK(max_amp_diff(a, b) == 0.0);
    CHECK(max_amp_diff(a, c) > 0.0);
    CHECK(a.is_normalized());

    Rng rng(7);
    for (int t = 0; t < 50; ++t) {
        const LocalOperator op = random_invertible(rng);
        CHECK(std::abs(op.det()) >= 0.1);
        const double largest = std::max({std::abs(op.b1), std::abs(op.b2), std::abs(op.b3),
                                         std::abs(op.b4)});
        CHECK(largest == doctest::Approx(1.0).epsilon(1e-12));

        const LocalOperator sl = random_special(rng);
        CHECK(std::abs(sl.det() - 1.0) < 1e-12);

        const LocalOperator u = random_unitary(rng);
        // unitarity: rows orthonormal
        CHECK(std::abs(u.b1 * std::conj(u.b1) + u.b2 * std::conj(u.b2) - 1.0) < 1e-12);
        CHECK(std::abs(u.b3 * std::conj(u.b3) + u.b4 * std::conj(u.b4) - 1.0) < 1e-12);
        CHECK(std::abs(u.b1 * std::conj(u.b3) + u.b2 * std::conj(u.b4)) < 1e-12);
        CHECK(std::abs(std::abs(u.det()) - 1.0) < 1e-12);
    }
}
