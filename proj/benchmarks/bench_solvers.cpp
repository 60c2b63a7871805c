// Microbenchmarks for the search kernels. The bondage search dominates the
// verification harness, so its scaling with n is the number that matters.

#include <benchmark/benchmark.h>

#include "gbond/bondage.hpp"
#include "gbond/domination.hpp"
#include "gbond/generators.hpp"
#include "gbond/graph6.hpp"

using namespace gbond;

static void BM_domination_family(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto family = enumerate_n_minus_3_regular(n);
    for (auto _ : state)
        for (const auto& [partition, g] : family)
            benchmark::DoNotOptimize(domination_number(g).gamma);
}
BENCHMARK(BM_domination_family)->DenseRange(6, 12, 2);

static void BM_domination_complete(benchmark::State& state) {
    const Graph g = complete_graph(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(domination_number(g).gamma);
}
BENCHMARK(BM_domination_complete)->Arg(16)->Arg(32)->Arg(64);

static void BM_bondage_family(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto family = enumerate_n_minus_3_regular(n);
    for (auto _ : state)
        for (const auto& [partition, g] : family)
            benchmark::DoNotOptimize(bondage_number(g).b);
}
BENCHMARK(BM_bondage_family)->DenseRange(6, 10, 1)->Unit(benchmark::kMillisecond);

static void BM_bondage_complete(benchmark::State& state) {
    const Graph g = complete_graph(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(bondage_number(g).b);
}
BENCHMARK(BM_bondage_complete)->DenseRange(4, 8, 1);

static void BM_graph6_roundtrip(benchmark::State& state) {
    const Graph g = cocktail_party(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(from_graph6(to_graph6(g)).edge_count());
}
BENCHMARK(BM_graph6_roundtrip)->Arg(8)->Arg(16)->Arg(31);

static void BM_domination_oracle(benchmark::State& state) {
    const Graph g = cycle_graph(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(domination_number_oracle(g));
}
BENCHMARK(BM_domination_oracle)->Arg(9)->Arg(12);

BENCHMARK_MAIN();
