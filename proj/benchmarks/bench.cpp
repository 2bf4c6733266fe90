#include <majcol/random.hpp>
#include <majcol/solver.hpp>
#include <majcol/tower.hpp>

#include <benchmark/benchmark.h>

using namespace majcol;

static void BM_LocalSearch(benchmark::State & state)
{
    auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(42);
    auto g = random_graph(rng, n, 8.0 / static_cast<double>(n));
    Constraints c(random_lists(rng, n, 2, 4));
    for (auto _ : state)
        benchmark::DoNotOptimize(local_search(g, c, 2));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LocalSearch)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

static void BM_DagGreedy(benchmark::State & state)
{
    auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(42);
    auto d = random_dag(rng, n, 6.0);
    Constraints c(random_lists(rng, n, 3, 5));
    for (auto _ : state)
        benchmark::DoNotOptimize(dag_greedy(d, c, 3));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DagGreedy)->RangeMultiplier(4)->Range(64, 65536)->Complexity();

// Whole pipeline, dominated by the n_max prefix colourings.
static void BM_TowerPrefix(benchmark::State & state)
{
    TowerConfig config;
    config.family = "grid";
    config.n_max = static_cast<std::size_t>(state.range(0));
    config.t = std::min<std::size_t>(64, config.n_max);
    for (auto _ : state)
        benchmark::DoNotOptimize(run_tower(config));
}
BENCHMARK(BM_TowerPrefix)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
