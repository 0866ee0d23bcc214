#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "wavescrub/filters.hpp"
#include "wavescrub/frame.hpp"
#include "wavescrub/geometry.hpp"
#include "wavescrub/metrics.hpp"
#include "wavescrub/pipeline.hpp"

using namespace wavescrub;

namespace {

Frame bench_frame(int n) {
    std::mt19937_64 rng(42);
    std::vector<double> v(static_cast<size_t>(n) * n);
    for (double& x : v) {
        x = 2.0 * ((rng() >> 11) * 0x1.0p-53) - 1.0;
    }
    return Frame(geometry_from_counts(n, n, 50.0), std::move(v));
}

}  // namespace

static void BM_LocalStats(benchmark::State& state) {
    const Frame f = bench_frame(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(local_stats(f, WindowSpec{2}));
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<int64_t>(f.values().size()));
}
BENCHMARK(BM_LocalStats)->Arg(101)->Arg(201)->Arg(401);

static void BM_AdaptiveWiener(benchmark::State& state) {
    const Frame f = bench_frame(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(adaptive_wiener(f, WindowSpec{2}, std::nullopt));
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<int64_t>(f.values().size()));
}
BENCHMARK(BM_AdaptiveWiener)->Arg(101)->Arg(201)->Arg(401);

static void BM_Median(benchmark::State& state) {
    const Frame f = bench_frame(static_cast<int>(state.range(0)));
    const WindowSpec w{static_cast<int>(state.range(1))};
    for (auto _ : state) {
        benchmark::DoNotOptimize(median_filter(f, w));
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<int64_t>(f.values().size()));
}
BENCHMARK(BM_Median)->Args({201, 1})->Args({201, 2})->Args({201, 3});

static void BM_Gaussian(benchmark::State& state) {
    const Frame f = bench_frame(static_cast<int>(state.range(0)));
    const double sigma = static_cast<double>(state.range(1)) / 10.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(gaussian_smooth(f, sigma));
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<int64_t>(f.values().size()));
}
BENCHMARK(BM_Gaussian)->Args({201, 8})->Args({201, 15})->Args({201, 30});

static void BM_DefaultPipeline(benchmark::State& state) {
    const Frame f = bench_frame(static_cast<int>(state.range(0)));
    const PipelineSpec spec = default_pipeline();
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_pipeline(f, spec));
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<int64_t>(f.values().size()));
}
BENCHMARK(BM_DefaultPipeline)->Arg(201)->Arg(401);

static void BM_NoiseEnergyMetric(benchmark::State& state) {
    const Frame a = bench_frame(static_cast<int>(state.range(0)));
    const Frame b = box_filter(a, WindowSpec{1});
    for (auto _ : state) {
        benchmark::DoNotOptimize(noise_energy_removed(a, b));
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<int64_t>(a.values().size()));
}
BENCHMARK(BM_NoiseEnergyMetric)->Arg(201)->Arg(401);
