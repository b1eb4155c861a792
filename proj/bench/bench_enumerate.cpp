#include <benchmark/benchmark.h>

#include "sturm/meander.hpp"

static void BM_EnumerateSerial(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(sturm::enumerate_sturm_serial(n));
}

static void BM_EnumerateParallel(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(sturm::enumerate_sturm(n));
}

BENCHMARK(BM_EnumerateSerial)->Arg(5)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)->Arg(5)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
