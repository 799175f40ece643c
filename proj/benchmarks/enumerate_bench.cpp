#include <benchmark/benchmark.h>

#include "cellmap/bijections.hpp"
#include "cellmap/enumerate.hpp"
#include "cellmap/rna.hpp"

using namespace cellmap;

static void BM_CountTable(benchmark::State& state) {
    const int max_n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        CountTable t = count_table(max_n);
        benchmark::DoNotOptimize(t.uni);
    }
}
BENCHMARK(BM_CountTable)->Arg(4)->Arg(5)->Arg(6);

static void BM_CountTableParallel(benchmark::State& state) {
    const int workers = static_cast<int>(state.range(0));
    for (auto _ : state) {
        CountTable t = count_table(6, workers);
        benchmark::DoNotOptimize(t.uni);
    }
}
BENCHMARK(BM_CountTableParallel)->Arg(2)->Arg(4);

static void BM_BetaRoundTrip(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto maps = all_unicellular(n);
    for (auto _ : state) {
        for (const auto& u : maps) {
            if (genus_unicellular(u) == 0) continue;
            benchmark::DoNotOptimize(beta_forward(beta_inverse(u)));
        }
    }
}
BENCHMARK(BM_BetaRoundTrip)->Arg(4)->Arg(5);

static void BM_Rewire(benchmark::State& state) {
    Diagram d = make_interaction(8, 4, {{1, 5}, {2, 6}, {3, 7}, {4, 8}});
    for (auto _ : state) {
        auto [out, trace] = rewire(d);
        benchmark::DoNotOptimize(out);
        benchmark::DoNotOptimize(trace);
    }
}
BENCHMARK(BM_Rewire);

BENCHMARK_MAIN();
