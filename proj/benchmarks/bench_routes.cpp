// Copyright (c) 2026 the sclag authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "sclag/discrete.hpp"
#include "sclag/freud.hpp"
#include "sclag/moments.hpp"
#include "sclag/numerics.hpp"

using namespace sclag;

static void BM_HankelRoute(benchmark::State& state) {
    WeightParams params = WeightParams::make(1.0, 0.5);
    const long N = state.range(0);
    for (auto _ : state) {
        CoeffTable c = hankel_route(params, N);
        benchmark::DoNotOptimize(c.b.back());
    }
    state.SetComplexityN(N);
}
BENCHMARK(BM_HankelRoute)->RangeMultiplier(2)->Range(4, 32)->Complexity();

static void BM_DiscreteRoute(benchmark::State& state) {
    WeightParams params = WeightParams::make(1.0, 0.5);
    const long N = state.range(0);
    for (auto _ : state) {
        DiscreteRun run = run_discrete(params, N);
        benchmark::DoNotOptimize(run.coeffs.b.back());
    }
    state.SetComplexityN(N);
}
BENCHMARK(BM_DiscreteRoute)->RangeMultiplier(2)->Range(4, 32)->Complexity();

static void BM_DpiRun(benchmark::State& state) {
    WeightParams params = WeightParams::make(1.0, 0.5);
    const long N = state.range(0);
    for (auto _ : state) {
        FreudTable f = dpi_run(params, N);
        benchmark::DoNotOptimize(f.A2.back());
    }
}
BENCHMARK(BM_DpiRun)->RangeMultiplier(2)->Range(8, 64);

static void BM_HalflineQuadrature(benchmark::State& state) {
    QuadratureOptions opts;
    opts.abs_tol = Real::parse("1e-25", kDefaultPrecision);
    for (auto _ : state) {
        Real v = integrate_halfline(Real(1.5, kDefaultPrecision),
                                    Real(1L, kDefaultPrecision), opts);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_HalflineQuadrature);

BENCHMARK_MAIN();
