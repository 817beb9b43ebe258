#include <benchmark/benchmark.h>

#include "leantopo/samplers.hpp"
#include "leantopo/spatial_index.hpp"

using namespace leantopo;

static void BM_NearestNeighbor(benchmark::State& state) {
    auto s = sample_torus(2.0, 0.8, static_cast<std::size_t>(state.range(0)));
    SpatialIndex index(s.cloud, SpatialIndex::Mode::Grid);
    std::size_t i = 0;
    for (auto _ : state) {
        auto r = index.nearest_neighbor(s.cloud.point(i), i);
        benchmark::DoNotOptimize(r);
        i = (i + 1) % s.cloud.size();
    }
}
BENCHMARK(BM_NearestNeighbor)->Arg(1000)->Arg(5000)->Arg(20000);

static void BM_BallEmpty(benchmark::State& state) {
    auto s = sample_torus(2.0, 0.8, static_cast<std::size_t>(state.range(0)));
    SpatialIndex index(s.cloud, SpatialIndex::Mode::Grid);
    std::size_t i = 0;
    for (auto _ : state) {
        const std::size_t ex[] = {i};
        bool r = index.ball_is_empty(s.cloud.point(i), 0.05, ex);
        benchmark::DoNotOptimize(r);
        i = (i + 1) % s.cloud.size();
    }
}
BENCHMARK(BM_BallEmpty)->Arg(5000)->Arg(20000);
