#include <benchmark/benchmark.h>

#include "coresets/bico.hpp"
#include "coresets/benchmark_gen.hpp"
#include "coresets/datagen.hpp"
#include "coresets/evaluation.hpp"
#include "coresets/geometry.hpp"
#include "coresets/group_sampling.hpp"
#include "coresets/kmeans.hpp"
#include "coresets/ray_maker.hpp"
#include "coresets/sensitivity_sampling.hpp"
#include "coresets/stream_kmpp.hpp"

namespace {

using namespace coresets;

const PointSet& mixture() {
    static const PointSet points = [] {
        MixtureConfig cfg;
        cfg.n = 5000;
        cfg.dim = 20;
        cfg.components = 10;
        cfg.seed = 1;
        return gaussian_mixture(cfg);
    }();
    return points;
}

void BM_KmeansppSeed(benchmark::State& state) {
    const auto& points = mixture();
    SeedConfig cfg;
    cfg.k = static_cast<std::size_t>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        Rng rng(seed++);
        benchmark::DoNotOptimize(kmeanspp_seed(points, cfg, rng));
    }
}
BENCHMARK(BM_KmeansppSeed)->Arg(10)->Arg(50);

void BM_SensitivityCoreset(benchmark::State& state) {
    const auto& points = mixture();
    SamplingConfig cfg;
    cfg.k = 10;
    cfg.coreset_size = static_cast<std::size_t>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        cfg.seed = seed++;
        benchmark::DoNotOptimize(sensitivity_coreset(points, cfg));
    }
}
BENCHMARK(BM_SensitivityCoreset)->Arg(500)->Arg(2000);

void BM_GroupCoreset(benchmark::State& state) {
    const auto& points = mixture();
    GroupingConfig cfg;
    cfg.k = 10;
    cfg.coreset_size = static_cast<std::size_t>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        cfg.seed = seed++;
        benchmark::DoNotOptimize(group_coreset(points, cfg));
    }
}
BENCHMARK(BM_GroupCoreset)->Arg(500)->Arg(2000);

void BM_StreamKmppCoreset(benchmark::State& state) {
    const auto& points = mixture();
    std::uint64_t seed = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(streamkmpp_coreset(
            points, static_cast<std::size_t>(state.range(0)), seed++));
}
BENCHMARK(BM_StreamKmppCoreset)->Arg(500);

void BM_BicoCoreset(benchmark::State& state) {
    const auto& points = mixture();
    BicoConfig cfg;
    cfg.target_size = static_cast<std::size_t>(state.range(0));
    cfg.threshold_estimate_k = 10;
    std::uint64_t seed = 0;
    for (auto _ : state) {
        cfg.seed = seed++;
        benchmark::DoNotOptimize(bico_coreset(points, cfg));
    }
}
BENCHMARK(BM_BicoCoreset)->Arg(500)->Arg(2000);

void BM_RaymakerCoreset(benchmark::State& state) {
    const auto& points = mixture();
    RayConfig cfg;
    cfg.k = 10;
    cfg.rays_per_center = 7;
    cfg.per_ray_centers = 8;
    std::uint64_t seed = 0;
    for (auto _ : state) {
        cfg.seed = seed++;
        benchmark::DoNotOptimize(raymaker_coreset(points, cfg));
    }
}
BENCHMARK(BM_RaymakerCoreset);

void BM_EvaluateBenchmark(benchmark::State& state) {
    const auto inst = generate_benchmark(10, 3);
    SamplingConfig cfg;
    cfg.k = 10;
    cfg.coreset_size = 1000;
    cfg.seed = 3;
    const auto coreset = sensitivity_coreset(inst.as_point_set(), cfg);
    EvalConfig ecfg;
    for (auto _ : state)
        benchmark::DoNotOptimize(evaluate_benchmark(inst, coreset, ecfg));
}
BENCHMARK(BM_EvaluateBenchmark);

}  // namespace

BENCHMARK_MAIN();
