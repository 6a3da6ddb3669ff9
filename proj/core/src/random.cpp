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
#include "qinv/random.hpp"

#include <cmath>
#include <numbers>

namespace qinv {

namespace {

// Re and Im each N(0, 1/2), so E|z|^2 = 1.
cplx complex_normal(Rng& rng) {
    std::normal_distribution<double> dist(0.0, std::numbers::sqrt2 / 2.0);
    return {dist(rng), dist(rng)};
}

} // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

PureState random_state(int n, Rng& rng) {
    if (n < 1 || n > PureState::max_qubits) {
        throw param_error("random_state: qubit count out of range");
    }
    std::vector<cplx> amps(std::size_t{1} << n);
    for (cplx& a : amps) {
        a = complex_normal(rng);
    }
    return PureState(n, std::move(amps)).normalized();
}

PureState random_state(int n, std::uint64_t seed) {
    Rng rng(seed);
    return random_state(n, rng);
}

LocalOperator random_invertible(Rng& rng) {
    while (true) {
        LocalOperator a{complex_normal(rng), complex_normal(rng), complex_normal(rng),
                        complex_normal(rng)};
        const double largest = std::max(std::max(std::abs(a.b1), std::abs(a.b2)),
                                        std::max(std::abs(a.b3), std::abs(a.b4)));
        if (largest == 0.0) {
            continue;
        }
        const double inv = 1.0 / largest;
        a = {a.b1 * inv, a.b2 * inv, a.b3 * inv, a.b4 * inv};
        if (std::abs(a.det()) >= 0.1) {
            return a;
        }
    }
}

LocalOperator random_invertible(std::uint64_t seed) {
    Rng rng(seed);
    return random_invertible(rng);
}

LocalOperator random_special(Rng& rng) { return random_invertible(rng).unit_determinant(); }

LocalOperator random_unitary(Rng& rng) {
    while (true) {
        const cplx a = complex_normal(rng);
        const cplx b = complex_normal(rng);
        const double norm = std::sqrt(std::norm(a) + std::norm(b));
        if (norm < 1e-6) {
            continue;
        }
        const cplx u = a / norm;
        const cplx v = b / norm;
        std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
        const cplx phase = std::polar(1.0, angle(rng));
        return {phase * u, phase * -std::conj(v), phase * v, phase * std::conj(u)};
    }
}

namespace {

template <typename Sampler>
LocalOperatorChain sample_chain(int n, Rng& rng, Sampler sampler) {
    std::vector<LocalOperator> ops;
    ops.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        ops.push_back(sampler(rng));
    }
    return LocalOperatorChain(std::move(ops));
}

} // namespace

LocalOperatorChain random_invertible_chain(int n, Rng& rng) {
    return sample_chain(n, rng, [](Rng& r) { return random_invertible(r); });
}

LocalOperatorChain random_special_chain(int n, Rng& rng) {
    return sample_chain(n, rng, [](Rng& r) { return random_special(r); });
}

LocalOperatorChain random_unitary_chain(int n, Rng& rng) {
    return sample_chain(n, rng, [](Rng& r) { return random_unitary(r); });
}

} // namespace qinv
