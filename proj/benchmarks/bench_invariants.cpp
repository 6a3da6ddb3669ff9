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
#include <benchmark/benchmark.h>

#include "qinv/qinv.hpp"

namespace {

using qinv::PureState;
namespace inv = qinv::invariants;

void BM_gn(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const PureState psi = qinv::random_state(n, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(inv::gn(psi).value);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_gn)->DenseRange(10, 20, 2)->Complexity(benchmark::oNSquared);

void BM_pn_product_form(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const PureState psi = qinv::random_state(n, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(inv::pn_product_form(psi).value);
    }
}
BENCHMARK(BM_pn_product_form)->DenseRange(10, 20, 2);

void BM_pn_appendix_form(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const PureState psi = qinv::random_state(n, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(inv::pn_appendix_form(psi).value);
    }
}
BENCHMARK(BM_pn_appendix_form)->DenseRange(10, 20, 2);

void BM_det_invariant(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const PureState psi = qinv::random_state(n, 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(inv::det_invariant(psi).value);
    }
}
BENCHMARK(BM_det_invariant)->DenseRange(4, 16, 4);

void BM_apply_chain(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const PureState psi = qinv::random_state(n, 5);
    qinv::Rng rng(6);
    const qinv::LocalOperatorChain chain = qinv::random_invertible_chain(n, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qinv::apply_chain(psi, chain).amp(0));
    }
}
BENCHMARK(BM_apply_chain)->DenseRange(10, 20, 2);

void BM_apply_permutation(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const PureState psi = qinv::random_state(n, 7);
    const auto sigma = qinv::QubitPermutation::transposition(n, 1, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qinv::apply_permutation(psi, sigma).amp(0));
    }
}
BENCHMARK(BM_apply_permutation)->DenseRange(10, 20, 2);

void BM_signature(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const PureState psi = qinv::random_state(n, 8);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qinv::classify::signature(psi).g_bit);
    }
}
BENCHMARK(BM_signature)->DenseRange(4, 12, 2);

void BM_convex_roof_rank2(benchmark::State& state) {
    const qinv::StateEnsemble mix(
        {{0.5, qinv::random_state(4, 9)}, {0.5, qinv::random_state(4, 10)}});
    qinv::measure::RoofConfig cfg;
    cfg.restarts = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(qinv::measure::convex_roof(mix, cfg).estimate);
    }
}
BENCHMARK(BM_convex_roof_rank2)->Arg(4)->Arg(16);

} // namespace

BENCHMARK_MAIN();
