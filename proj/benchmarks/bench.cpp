#include <benchmark/benchmark.h>

#include "rotorcomb/engine.hpp"
#include "rotorcomb/harmonic.hpp"
#include "rotorcomb/shape.hpp"

using namespace rotorcomb;

static void BM_Aggregate(benchmark::State& state) {
    const std::int64_t n = cardinality_Bm(state.range(0));
    for (auto _ : state) {
        auto res = aggregate(n);
        benchmark::DoNotOptimize(res.cluster);
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_Aggregate)->Arg(5)->Arg(10)->Arg(15)->Arg(20)->Arg(25);

static void BM_Halfline(benchmark::State& state) {
    for (auto _ : state) {
        auto res = halfline_process(state.range(0));
        benchmark::DoNotOptimize(res.odometer);
    }
}
BENCHMARK(BM_Halfline)->Arg(1000)->Arg(10000)->Arg(100000);

static void BM_ExitSequence(benchmark::State& state) {
    for (auto _ : state) {
        auto seq = cluster_e_sequence(state.range(0));
        benchmark::DoNotOptimize(seq.values);
    }
}
BENCHMARK(BM_ExitSequence)->Arg(100)->Arg(500)->Arg(2000);

static void BM_HarmonicRotor(benchmark::State& state) {
    ClusterShape B(state.range(0), Profile::cluster());
    for (auto _ : state) {
        auto res = harmonic_by_rotor(B);
        benchmark::DoNotOptimize(res.measure.exits);
    }
}
BENCHMARK(BM_HarmonicRotor)->Arg(2)->Arg(3)->Arg(4);

static void BM_MonteCarlo(benchmark::State& state) {
    ClusterShape B(4, Profile::cluster());
    for (auto _ : state) {
        auto res = harmonic_by_montecarlo(B, state.range(0), 7);
        benchmark::DoNotOptimize(res.exits);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MonteCarlo)->Arg(10000)->Arg(100000);

BENCHMARK_MAIN();
