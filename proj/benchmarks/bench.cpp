#include <benchmark/benchmark.h>

#include "harmsum/power_series.hpp"
#include "harmsum/reference.hpp"
#include "harmsum/series.hpp"
#include "harmsum/snm.hpp"

namespace {

void BM_SnmTable(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(harmsum::SnmTable::build(n, 6));
}
BENCHMARK(BM_SnmTable)->Arg(60)->Arg(250);

void BM_SnmDirect(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(harmsum::snm_direct(n, 5));
}
BENCHMARK(BM_SnmDirect)->Arg(60)->Arg(250);

void BM_SnmNested(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(harmsum::snm_nested(20, 6));
}
BENCHMARK(BM_SnmNested);

void BM_GfCoefficients(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(harmsum::gf_coefficients(5, order));
}
BENCHMARK(BM_GfCoefficients)->Arg(20)->Arg(40);

void BM_Zeta3HarmonicForm(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(harmsum::zeta3_harmonic_form(40, 250));
}
BENCHMARK(BM_Zeta3HarmonicForm);

void BM_ZetaEulerMaclaurin(benchmark::State& state) {
    const int digits = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(harmsum::zeta_euler_maclaurin(3, digits));
}
BENCHMARK(BM_ZetaEulerMaclaurin)->Arg(40)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
