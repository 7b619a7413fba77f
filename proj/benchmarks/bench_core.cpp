#include <benchmark/benchmark.h>

#include "perfectoid/sampling.hpp"
#include "perfectoid/tilt.hpp"

using namespace perfectoid;

namespace {
const PExponent N16 = PExponent::integer(2, 16);
}

static void BM_WittPolyBuild(benchmark::State& state) {
    const std::uint32_t p = static_cast<std::uint32_t>(state.range(0));
    const std::uint32_t n = static_cast<std::uint32_t>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(build_witt_polys(p, n));
}
BENCHMARK(BM_WittPolyBuild)->Args({2, 3})->Args({3, 3})->Args({2, 4});

static void BM_WittMul(benchmark::State& state) {
    const std::uint32_t n = static_cast<std::uint32_t>(state.range(0));
    const WittPolyCache& cache = witt_cache(2, n);
    Sampler s(1);
    std::vector<CharPSeries> ca, cb;
    for (std::uint32_t i = 0; i < n; ++i) {
        ca.push_back(s.charp(2, N16, 3, 2, 1));
        cb.push_back(s.charp(2, N16, 3, 2, 1));
    }
    WittVector a(2, ca), b(2, cb);
    for (auto _ : state) benchmark::DoNotOptimize(witt_mul(cache, a, b));
}
BENCHMARK(BM_WittMul)->Arg(2)->Arg(3)->Arg(4);

static void BM_Canonicalize(benchmark::State& state) {
    const std::uint32_t n = static_cast<std::uint32_t>(state.range(0));
    const WittPolyCache& cache = witt_cache(2, n);
    Sampler s(2);
    std::vector<CharPSeries> comps;
    for (std::uint32_t i = 0; i < n; ++i) comps.push_back(s.charp(2, N16, 3, 3, 1));
    WittVector w(2, comps);
    for (auto _ : state) benchmark::DoNotOptimize(canonicalize(cache, w));
}
BENCHMARK(BM_Canonicalize)->Arg(2)->Arg(3)->Arg(4);

static void BM_UntiltMul(benchmark::State& state) {
    const WittPolyCache& cache = witt_cache(2, 3);
    Sampler s(3);
    UntiltElement a = s.untilt(2, 3, N16, 2, 1);
    UntiltElement b = s.untilt(2, 3, N16, 2, 1);
    for (auto _ : state) benchmark::DoNotOptimize(untilt_mul(cache, a, b));
}
BENCHMARK(BM_UntiltMul);

static void BM_SpectralSeminorm(benchmark::State& state) {
    Sampler s(4);
    GaussElement f = s.gauss(CoefSide::charp, 2, 1, 1, N16, 3, 2, 1);
    if (f.empty()) f = GaussElement::constant(FieldElem(CharPSeries::one(2, N16)), 1);
    const std::uint32_t budget = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(spectral_seminorm_gauss(f, budget));
}
BENCHMARK(BM_SpectralSeminorm)->Arg(4)->Arg(8);

static void BM_TiltAddLimit(benchmark::State& state) {
    const WittPolyCache& cache = witt_cache(2, 3);
    CharPSeries t = CharPSeries::t(2, N16);
    CharPSeries u = t + CharPSeries::monomial(2, PExponent(2, 1, 1), 1, N16);
    for (auto _ : state) benchmark::DoNotOptimize(tilt_add_limit(cache, t, u, 0, 3, N16));
}
BENCHMARK(BM_TiltAddLimit);

BENCHMARK_MAIN();
