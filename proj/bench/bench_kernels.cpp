// Parallel kernels against their serial references.

#include "geochrom/catalog.hpp"
#include "geochrom/generators.hpp"
#include "geochrom/geometric_graph.hpp"
#include "geochrom/obstructions.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

using namespace geochrom;

namespace {

struct Drawing {
    std::vector<Point> points;
    std::vector<Edge> edges;
};

Drawing random_drawing(int n, double p)
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> coord(0, 1 << 20);
    std::bernoulli_distribution keep(p);
    Drawing d;
    for (int i = 0; i < n; ++i)
        d.points.push_back({coord(rng), coord(rng)});
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (keep(rng))
                d.edges.push_back({i, j});
    return d;
}

void BM_find_crossings(benchmark::State& state)
{
    const auto d = random_drawing(static_cast<int>(state.range(0)), 0.3);
    for (auto _ : state)
        benchmark::DoNotOptimize(find_crossings(d.points, d.edges));
}

void BM_find_crossings_serial(benchmark::State& state)
{
    const auto d = random_drawing(static_cast<int>(state.range(0)), 0.3);
    for (auto _ : state)
        benchmark::DoNotOptimize(find_crossings_serial(d.points, d.edges));
}

void BM_grid_patterns(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(grid_patterns(static_cast<int>(state.range(0)), static_cast<int>(state.range(1))));
}

void BM_grid_patterns_serial(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(
            grid_patterns_serial(static_cast<int>(state.range(0)), static_cast<int>(state.range(1))));
}

GeometricGraph obstruction_input(int n)
{
    RandomGraphParams params;
    params.vertex_count = n;
    params.edge_probability = 0.4;
    params.seed = 11;
    return random_geometric_graph(params);
}

void BM_non_identifiable_pairs(benchmark::State& state)
{
    const auto g = obstruction_input(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(non_identifiable_pairs(g));
}

void BM_non_identifiable_pairs_serial(benchmark::State& state)
{
    const auto g = obstruction_input(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(non_identifiable_pairs_serial(g));
}

} // namespace

BENCHMARK(BM_find_crossings)->Arg(50)->Arg(200);
BENCHMARK(BM_find_crossings_serial)->Arg(50)->Arg(200);
BENCHMARK(BM_grid_patterns)->Args({5, 6})->Args({6, 6});
BENCHMARK(BM_grid_patterns_serial)->Args({5, 6})->Args({6, 6});
BENCHMARK(BM_non_identifiable_pairs)->Arg(10)->Arg(14);
BENCHMARK(BM_non_identifiable_pairs_serial)->Arg(10)->Arg(14);

BENCHMARK_MAIN();
