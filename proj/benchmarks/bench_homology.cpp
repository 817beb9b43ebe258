#include <benchmark/benchmark.h>

#include "leantopo/adaptive_complex.hpp"
#include "leantopo/homology_z2.hpp"
#include "leantopo/samplers.hpp"

using namespace leantopo;

static void BM_ReduceTorusComplex(benchmark::State& state) {
    auto s = sample_torus(2.0, 0.8, static_cast<std::size_t>(state.range(0)));
    std::vector<double> lnfs(s.cloud.size(), 0.4);
    auto complex = build_scale_complex(s.cloud, lnfs, 0.7, 0.7, 3);
    for (auto _ : state) {
        auto r = persistent_image_rank(complex, 2);
        benchmark::DoNotOptimize(r.image_rank.data());
    }
    state.counters["simplices"] =
        static_cast<double>(complex.simplices.size());
}
BENCHMARK(BM_ReduceTorusComplex)->Arg(300)->Arg(600)
    ->Unit(benchmark::kMillisecond);
