#include "lrq/kitaev.hpp"
#include "lrq/recurrence.hpp"
#include "lrq/spectra.hpp"
#include "lrq/spherical.hpp"

#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>
#include <vector>

namespace {

void BM_CoefficientTable(benchmark::State& state) {
    const lrq::spectra::CouplingSpec spec{0.5, 1, state.range(0), 1.0};
    for (auto _ : state) benchmark::DoNotOptimize(lrq::spectra::coefficient_table(spec, 1));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CoefficientTable)->RangeMultiplier(4)->Range(256, 4096)->Complexity(benchmark::oNSquared);

void BM_LimitCoefficient(benchmark::State& state) {
    const double alpha = 0.1 * static_cast<double>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(lrq::spectra::hopping_coeff_limit(alpha, 7));
        benchmark::DoNotOptimize(lrq::spectra::pairing_coeff_limit(alpha, 7));
    }
}
BENCHMARK(BM_LimitCoefficient)->DenseRange(1, 9, 4);

void BM_Polylog(benchmark::State& state) {
    const double k = std::numbers::pi / static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(lrq::spectra::polylog_couplings(1.5, k));
}
BENCHMARK(BM_Polylog)->Arg(1)->Arg(16)->Arg(1024);

void BM_KitaevQuench(benchmark::State& state) {
    lrq::kitaev::QuenchProtocol p;
    p.spec = {0.4, 1, state.range(0), 1.0};
    p.t_max = 20.0;
    for (auto _ : state) benchmark::DoNotOptimize(lrq::kitaev::run_quench(p, 1));
    state.SetItemsProcessed(state.iterations() * state.range(0) * 401);
}
BENCHMARK(BM_KitaevQuench)->Arg(128)->Arg(2048)->Unit(benchmark::kMillisecond);

void BM_SemicircleObservable(benchmark::State& state) {
    const auto q = lrq::spherical::make_lift_quench(lrq::spherical::dos_semicircle(0.5, 2.0), 20.0, 0.1);
    for (auto _ : state) benchmark::DoNotOptimize(lrq::spherical::quench_observable(q, 1));
}
BENCHMARK(BM_SemicircleObservable)->Unit(benchmark::kMillisecond);

void BM_RecurrenceScan(benchmark::State& state) {
    std::vector<double> energies;
    for (int i = 0; i < state.range(0); ++i) energies.push_back(std::sqrt(2.0 + i) * (1 + i));
    for (auto _ : state) {
        benchmark::DoNotOptimize(lrq::recurrence::first_recurrence_scan(energies, 0.1, 0.01, 200.0, 0.01));
    }
}
BENCHMARK(BM_RecurrenceScan)->Arg(3)->Arg(10)->Arg(40)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
