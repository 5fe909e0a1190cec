#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <numeric>

#include "coresets/benchmark_gen.hpp"
#include "coresets/datagen.hpp"
#include "coresets/evaluation.hpp"
#include "coresets/geometry.hpp"
#include "coresets/group_sampling.hpp"
#include "coresets/kmeans.hpp"
#include "coresets/sensitivity_sampling.hpp"
#include "coresets/stream_kmpp.hpp"
#include "test_util.hpp"

using namespace coresets;

namespace {

PointSet mixture_2000(std::uint64_t seed) {
    MixtureConfig cfg;
    cfg.n = 2000;
    cfg.dim = 8;
    cfg.components = 6;
    cfg.seed = seed;
    return gaussian_mixture(cfg);
}

}  // namespace

TEST_CASE("sensitivity: pre-clamp total weight is (1+eps)*n") {
    const auto points = mixture_2000(1);
    for (double eps : {0.0, 0.25}) {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            SamplingConfig cfg;
            cfg.k = 10;
            cfg.coreset_size = 300;
            cfg.epsilon = eps;
            cfg.clamp_negative_weights = false;
            cfg.seed = seed;
            const auto coreset = sensitivity_coreset(points, cfg);
            const double expected = (1.0 + eps) * 2000.0;
            CHECK(coreset.total_weight() ==
                  doctest::Approx(expected).epsilon(1e-9));
        }
    }
}

TEST_CASE("sensitivity: single-point degenerate case") {
    const auto points = test_util::make_points({{4.0, 4.0}});
    SamplingConfig cfg;
    cfg.k = 1;
    cfg.coreset_size = 10;  // capped at n = 1
    cfg.seed = 3;
    const auto coreset = sensitivity_coreset(points, cfg);
    REQUIRE(coreset.size() == 1);
    CHECK(coreset.points(0, 0) == 4.0);
    CHECK(coreset.weights[0] == doctest::Approx(1.0));
}

TEST_CASE("sensitivity: reproducible and source-tracked") {
    const auto points = mixture_2000(2);
    SamplingConfig cfg;
    cfg.k = 5;
    cfg.coreset_size = 100;
    cfg.seed = 77;
    const auto a = sensitivity_coreset(points, cfg);
    const auto b = sensitivity_coreset(points, cfg);
    CHECK(a.points.data == b.points.data);
    CHECK(a.weights == b.weights);
    REQUIRE(a.source_indices.has_value());
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto src = points.point((*a.source_indices)[i]);
        CHECK(squared_distance(src, a.points.row(i)) == 0.0);
    }
}

TEST_CASE("group: uniform ring reduces to uniform sampling") {
    // One input point at the origin acts as the center; everything else
    // sits on a circle around it, so exactly one ring exists and all of it
    // is sampled uniformly with weight ring-size / budget.
    const std::size_t on_circle = 40;
    Matrix m(on_circle + 1, 2, 0.0);
    for (std::size_t i = 0; i < on_circle; ++i) {
        const double angle = 2.0 * 3.14159265358979323846 *
                             static_cast<double>(i) / static_cast<double>(on_circle);
        m(i + 1, 0) = 2.0 * std::cos(angle);
        m(i + 1, 1) = 2.0 * std::sin(angle);
    }
    const PointSet points{std::move(m)};

    GroupingConfig cfg;
    cfg.k = 1;
    cfg.coreset_size = 10;
    cfg.seed = 5;
    const std::vector<std::size_t> center_idx{0};
    const auto coreset = group_coreset(points, center_idx, cfg);

    REQUIRE(coreset.source_indices.has_value());
    const double expected = static_cast<double>(on_circle) / 10.0;
    for (std::size_t i = 0; i < coreset.size(); ++i) {
        if ((*coreset.source_indices)[i] == 0) continue;  // the center
        CHECK(coreset.weights[i] ==
              doctest::Approx(expected * std::round(coreset.weights[i] / expected))
                  .epsilon(1e-12));
        // Merged duplicates are integer multiples of the base weight.
        CHECK(coreset.weights[i] >= expected - 1e-12);
    }
    CHECK(coreset.total_weight() == doctest::Approx(41.0).epsilon(1e-9));
}

TEST_CASE("group: pre-clamp total weight is (1+eps)*n") {
    const auto points = mixture_2000(3);
    for (double eps : {0.0, 0.5}) {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            GroupingConfig cfg;
            cfg.k = 10;
            cfg.coreset_size = 300;
            cfg.epsilon = eps;
            cfg.clamp_negative_weights = false;
            cfg.seed = seed;
            const auto coreset = group_coreset(points, cfg);
            CHECK(coreset.total_weight() ==
                  doctest::Approx((1.0 + eps) * 2000.0).epsilon(1e-9));
        }
    }
}

TEST_CASE("group: reproducible with fixed seed") {
    const auto points = mixture_2000(4);
    GroupingConfig cfg;
    cfg.k = 4;
    cfg.coreset_size = 80;
    cfg.seed = 13;
    const auto a = group_coreset(points, cfg);
    const auto b = group_coreset(points, cfg);
    CHECK(a.points.data == b.points.data);
    CHECK(a.weights == b.weights);
}

TEST_CASE("streamkmpp: T = n reproduces the data set") {
    Rng rng(6);
    const auto points = test_util::random_points(rng, 30, 3);
    const auto coreset = streamkmpp_coreset(points, 30, /*seed=*/9);
    REQUIRE(coreset.size() == 30);
    REQUIRE(coreset.source_indices.has_value());
    std::vector<std::size_t> sources = *coreset.source_indices;
    std::sort(sources.begin(), sources.end());
    for (std::size_t i = 0; i < 30; ++i) CHECK(sources[i] == i);
    for (double w : coreset.weights) CHECK(w == 1.0);
}

TEST_CASE("streamkmpp: weights always sum to n") {
    const auto points = mixture_2000(7);
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        const auto coreset = streamkmpp_coreset(points, 150, seed);
        CHECK(coreset.total_weight() == 2000.0);
    }
}

TEST_CASE("streamkmpp: identical input collapses to one point") {
    Matrix m(25, 2, 1.5);
    const PointSet points{std::move(m)};
    const auto coreset = streamkmpp_coreset(points, 10, /*seed=*/1);
    REQUIRE(coreset.size() == 1);
    CHECK(coreset.weights[0] == 25.0);
    CHECK(coreset.points(0, 0) == 1.5);
}

TEST_CASE("samplers keep low benchmark distortion at full-size budgets") {
    const auto inst = generate_benchmark(10, 3);
    const PointSet points = inst.as_point_set();
    const std::size_t T = points.size();  // 200 * 10 capped at n

    std::size_t sens_ok = 0, group_ok = 0, stream_ok = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        EvalConfig ecfg;
        ecfg.seed = seed;

        SamplingConfig scfg;
        scfg.k = 10;
        scfg.coreset_size = T;
        scfg.seed = seed;
        if (evaluate_benchmark(inst, sensitivity_coreset(points, scfg), ecfg)
                .max_distortion <= 1.15)
            ++sens_ok;

        GroupingConfig gcfg;
        static_cast<SamplingConfig&>(gcfg) = scfg;
        if (evaluate_benchmark(inst, group_coreset(points, gcfg), ecfg)
                .max_distortion <= 1.2)
            ++group_ok;

        if (evaluate_benchmark(inst, streamkmpp_coreset(points, T, seed), ecfg)
                .max_distortion <= 1.4)
            ++stream_ok;
    }
    CHECK(sens_ok >= 9);
    CHECK(group_ok >= 9);
    CHECK(stream_ok >= 9);
}

TEST_CASE("group: oversized ring budgets are truncated and redistributed") {
    // A two-point ring carrying most of the cost attracts nearly the whole
    // budget; truncation at the ring size must push the surplus to the
    // other ring while conserving mass exactly. Outlier magnitude is kept
    // small enough that the inliers stay above the cheap-snap threshold.
    Matrix m(42, 1, 0.0);
    m(0, 0) = 0.0;  // the center
    for (std::size_t i = 1; i < 40; ++i) m(i, 0) = 2.0 + 0.001 * i;
    m(40, 0) = std::sqrt(700.0);
    m(41, 0) = -std::sqrt(700.0);
    const PointSet points{std::move(m)};

    GroupingConfig cfg;
    cfg.k = 1;
    cfg.coreset_size = 20;
    cfg.clamp_negative_weights = false;
    cfg.seed = 3;
    const std::vector<std::size_t> center_idx{0};
    const auto coreset = group_coreset(points, center_idx, cfg);

    REQUIRE(coreset.source_indices.has_value());
    std::size_t outliers = 0, inliers = 0;
    for (std::size_t i = 0; i < coreset.size(); ++i) {
        const std::size_t src = (*coreset.source_indices)[i];
        if (src >= 40) ++outliers;
        else if (src >= 1) ++inliers;
    }
    CHECK(outliers <= 2);   // ring of two points holds at most two entries
    CHECK(inliers >= 5);    // surplus flowed to the big ring
    CHECK(coreset.total_weight() == doctest::Approx(42.0).epsilon(1e-9));
}

TEST_CASE("all three samplers stay within a loose cost band at the bicriteria") {
    const auto points = mixture_2000(8);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Rng rng(seed);
        const CenterSet bic = bicriteria(points, 6, 2.0, rng);
        const double full = clustering_cost(points, bic);

        SamplingConfig scfg;
        scfg.k = 6;
        scfg.coreset_size = 240;
        scfg.seed = seed;
        GroupingConfig gcfg;
        static_cast<SamplingConfig&>(gcfg) = scfg;

        const WeightedCoreset coresets[] = {
            sensitivity_coreset(points, scfg),
            group_coreset(points, gcfg),
            streamkmpp_coreset(points, 240, seed),
        };
        for (const auto& coreset : coresets) {
            const double compressed = clustering_cost(coreset, bic);
            CHECK(compressed <= 3.0 * full);
            CHECK(full <= 3.0 * compressed);
        }
    }
}
