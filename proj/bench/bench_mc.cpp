// Serial reference vs OpenMP kernel on the same Monte Carlo experiments.

#include "lvm/montecarlo.hpp"

#include <benchmark/benchmark.h>

namespace {

const lvm::Event quadruple{lvm::EventKind::quadruple_exists, 0};
const lvm::Event cliques{lvm::EventKind::k_clique_count, 4};

void BM_serial_quadruple(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(lvm::mc_estimate_serial(quadruple, state.range(0), 2000, 1));
}

void BM_parallel_quadruple(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(lvm::mc_estimate(quadruple, state.range(0), 2000, 1, state.range(1)));
}

void BM_serial_cliques(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(lvm::mc_estimate_serial(cliques, 16, 1000, 1));
}

void BM_parallel_cliques(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(lvm::mc_estimate(cliques, 16, 1000, 1, static_cast<int>(state.range(0))));
}

} // namespace

BENCHMARK(BM_serial_quadruple)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_parallel_quadruple)->ArgsProduct({{12, 24}, {1, 2, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_serial_cliques)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_parallel_cliques)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
