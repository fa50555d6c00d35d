// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <cmath>

#include "mraseed/overlap.hpp"
#include "mraseed/sequence.hpp"
#include "mraseed/synthesis.hpp"

using namespace mraseed;

static void BM_OverlapTableGaussian(benchmark::State& state) {
    const auto s = SeedFunction::gaussian();
    const int radius = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(overlap_table(s, radius));
}
BENCHMARK(BM_OverlapTableGaussian)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_OverlapTableLorentzian(benchmark::State& state) {
    const auto s = SeedFunction::lorentzian_ft();
    for (auto _ : state) benchmark::DoNotOptimize(overlap_table(s, 32));
}
BENCHMARK(BM_OverlapTableLorentzian)->Unit(benchmark::kMillisecond);

static void BM_CWeights(benchmark::State& state) {
    const auto series = spectral_series(overlap_table(SeedFunction::box_momentum(2 * state.range(0) + 1),
                                                      static_cast<int>(state.range(0)) + 2));
    for (auto _ : state) benchmark::DoNotOptimize(c_weights(series, PhaseSpec::zero(), 0));
}
BENCHMARK(BM_CWeights)->Arg(1)->Arg(5)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_CWeightsQuadratic(benchmark::State& state) {
    const auto series = spectral_series(overlap_table(SeedFunction::gaussian(), 8));
    for (auto _ : state) benchmark::DoNotOptimize(c_weights(series, PhaseSpec::quadratic(1.0), 64));
}
BENCHMARK(BM_CWeightsQuadratic)->Unit(benchmark::kMillisecond);

static void BM_FilterCoefficients(benchmark::State& state) {
    const auto s = SeedFunction::box_position(1.5);
    const auto c = c_weights(spectral_series(overlap_table(s, 8)), PhaseSpec::zero(), 0);
    FilterOptions o;
    o.n_cap = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(filter_coefficients(s, c, o));
}
BENCHMARK(BM_FilterCoefficients)->Arg(512)->Arg(8192)->Unit(benchmark::kMillisecond);

static void BM_ClassifyDecay(benchmark::State& state) {
    std::vector<cplx> v;
    const long n = state.range(0);
    for (long i = -n; i <= n; ++i) v.emplace_back(1.0 / (1.0 + static_cast<double>(i * i)));
    const TruncatedSequence x(-n, std::move(v));
    for (auto _ : state) benchmark::DoNotOptimize(classify_decay(x));
}
BENCHMARK(BM_ClassifyDecay)->Arg(256)->Arg(65536);

static void BM_Convolve(benchmark::State& state) {
    const TruncatedSequence x(0, std::vector<cplx>(static_cast<std::size_t>(state.range(0)), cplx(0.5, 0.25)));
    for (auto _ : state) benchmark::DoNotOptimize(convolve(x, x));
}
BENCHMARK(BM_Convolve)->Arg(64)->Arg(1024);

BENCHMARK_MAIN();
