#include <benchmark/benchmark.h>

#include "leantopo/lean_set.hpp"
#include "leantopo/samplers.hpp"
#include "leantopo/tangent_estimation.hpp"

using namespace leantopo;

static void BM_LeanSetCircle(benchmark::State& state) {
    auto s = sample_circle(1.0, static_cast<std::size_t>(state.range(0)));
    SpatialIndex index(s.cloud);
    auto normals = estimate_all_normals(s.cloud, index);
    const double beta = kTangentAngleWindow;
    for (auto _ : state) {
        auto lean = build_lean_set(s.cloud, normals, index, beta, 0.5);
        benchmark::DoNotOptimize(lean.points.data());
    }
}
BENCHMARK(BM_LeanSetCircle)->Arg(200)->Arg(500)->Arg(1000)
    ->Unit(benchmark::kMillisecond);

static void BM_NormalsTorus(benchmark::State& state) {
    auto s = sample_torus(2.0, 0.8, static_cast<std::size_t>(state.range(0)));
    SpatialIndex index(s.cloud);
    for (auto _ : state) {
        auto n = estimate_all_normals(s.cloud, index);
        benchmark::DoNotOptimize(n.data());
    }
}
BENCHMARK(BM_NormalsTorus)->Arg(1000)->Arg(5000)
    ->Unit(benchmark::kMillisecond);
