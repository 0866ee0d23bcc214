#include <benchmark/benchmark.h>

#include "wavescrub/fdtd.hpp"
#include "wavescrub/geometry.hpp"
#include "wavescrub/noise.hpp"
#include "wavescrub/phantom.hpp"

using namespace wavescrub;

namespace {

SynthConfig sim_config(double extent_mm) {
    SynthConfig config;
    config.geometry = geometry_from_scan(extent_mm, extent_mm, 50.0);
    config.source_x_mm = extent_mm / 2.0;
    config.source_y_mm = extent_mm / 2.0;
    config.snapshot_times_s = {1.0e-6};
    return config;
}

}  // namespace

static void BM_Simulate(benchmark::State& state) {
    // interior (n x n) plus the 20-cell sponge collar, 200 steps
    const double extent_mm =
        static_cast<double>(state.range(0) - 1) * 50.0 * 1e-3;
    const SynthConfig config = sim_config(extent_mm);
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate_wavefield(config));
    }
    state.SetItemsProcessed(
        state.iterations() * 200 *
        static_cast<int64_t>(state.range(0) + 40) * (state.range(0) + 40));
}
BENCHMARK(BM_Simulate)->Arg(101)->Arg(201)->Unit(benchmark::kMillisecond);

static void BM_SimulateWithEnergyTrace(benchmark::State& state) {
    SynthConfig config = sim_config(5.0);
    config.record_energy = true;
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate_wavefield(config));
    }
}
BENCHMARK(BM_SimulateWithEnergyTrace)->Unit(benchmark::kMillisecond);

static void BM_RingsPhantom(benchmark::State& state) {
    const ScanGeometry g = geometry_from_scan(10.0, 10.0, 50.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            make_phantom(PhantomKind::wavefront_rings, g, PhantomParams{}, 0));
    }
}
BENCHMARK(BM_RingsPhantom);

static void BM_AddNoise(benchmark::State& state) {
    const ScanGeometry g = geometry_from_scan(10.0, 10.0, 50.0);
    const Frame clean =
        make_phantom(PhantomKind::wavefront_rings, g, PhantomParams{}, 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            add_noise(clean, {NoiseKind::gaussian, 0.05}, 1));
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<int64_t>(clean.values().size()));
}
BENCHMARK(BM_AddNoise);

BENCHMARK_MAIN();
