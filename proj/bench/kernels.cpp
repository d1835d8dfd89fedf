#include <benchmark/benchmark.h>

#include <omp.h>

#include "planar_story/generators.hpp"
#include "planar_story/geometry.hpp"
#include "planar_story/treewidth.hpp"

using namespace pstory;

namespace {

void crossing_graph_build(benchmark::State& state, bool parallel) {
    const auto g = gen_random_geometric(static_cast<int>(state.range(0)), 2.0, 11);
    for (auto _ : state) {
        auto x = parallel ? build_crossing_graph(g) : build_crossing_graph_serial(g);
        benchmark::DoNotOptimize(x);
    }
    state.counters["edges"] = static_cast<double>(g.edges.size());
    state.counters["threads"] = parallel ? omp_get_max_threads() : 1;
}

void pareto_dp(benchmark::State& state, execution mode) {
    const int n = static_cast<int>(state.range(0));
    const auto x = gen_series_parallel(n, 1.6, 5);
    const auto dec = min_fill_in_decomposition(x, 64, 0);
    for (auto _ : state) {
        auto front = pareto_pairs(x, *dec.td, mode);
        benchmark::DoNotOptimize(front);
    }
    state.counters["width"] = dec.width;
    state.counters["threads"] = mode == execution::parallel ? omp_get_max_threads() : 1;
}

}  // namespace

BENCHMARK_CAPTURE(crossing_graph_build, serial, false)->Arg(100)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(crossing_graph_build, parallel, true)->Arg(100)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(pareto_dp, serial, execution::serial)->Arg(100)->Arg(400)->Arg(1600)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(pareto_dp, parallel, execution::parallel)->Arg(100)->Arg(400)->Arg(1600)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
