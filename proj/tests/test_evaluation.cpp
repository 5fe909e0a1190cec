#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "coresets/benchmark_gen.hpp"
#include "coresets/evaluation.hpp"
#include "coresets/geometry.hpp"
#include "coresets/meb.hpp"
#include "test_util.hpp"

using namespace coresets;
using test_util::make_centers;
using test_util::make_matrix;
using test_util::make_points;

namespace {

WeightedCoreset identity_coreset(const PointSet& points) {
    std::vector<std::size_t> sources(points.size());
    for (std::size_t i = 0; i < sources.size(); ++i) sources[i] = i;
    return WeightedCoreset{points.matrix(), points.weights(), std::move(sources)};
}

}  // namespace

TEST_CASE("distortion identities") {
    Rng rng(101);
    const auto points = test_util::random_points(rng, 50, 3);
    const auto coreset = identity_coreset(points);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix c(3, 3);
        for (double& v : c.data) v = rng.uniform(-5.0, 5.0);
        CHECK(distortion(points, coreset, CenterSet(c)) == 1.0);
    }
}

TEST_CASE("distortion of a symmetric half-weight coreset") {
    const auto points =
        make_points({{-1.0, 0.0}, {1.0, 0.0}, {-1.0, 2.0}, {1.0, 2.0}});
    WeightedCoreset coreset{make_matrix({{-1.0, 0.0}, {-1.0, 2.0}}), {2.0, 2.0},
                            std::vector<std::size_t>{0, 2}};
    const auto centers = make_centers({{0.0, 0.0}, {0.0, 2.0}});
    CHECK(distortion(points, coreset, centers) == doctest::Approx(1.0));
}

TEST_CASE("distortion hand example") {
    const auto points = make_points({{0.0}, {10.0}});
    WeightedCoreset coreset{make_matrix({{0.0}, {10.0}}), {1.0, 3.0},
                            std::vector<std::size_t>{0, 1}};
    const auto centers = make_centers({{0.0}});
    // cost_A = 100, cost_coreset = 300.
    CHECK(distortion(points, coreset, centers) == doctest::Approx(3.0));
}

TEST_CASE("distortion degenerates to infinity on non-positive costs") {
    const auto points = make_points({{0.0}, {1.0}});
    WeightedCoreset coreset{make_matrix({{0.0}}), {2.0},
                            std::vector<std::size_t>{0}};
    const auto centers = make_centers({{0.0}});
    CHECK(std::isinf(distortion(points, coreset, centers)));
    CHECK(std::isinf(distortion(0.0, 1.0)));
    CHECK(std::isinf(distortion(1.0, -2.0)));
}

TEST_CASE("kmeanspp candidates") {
    SUBCASE("degenerate domain gives the degenerate candidate") {
        Matrix m(6, 2, 2.0);
        const PointSet domain{std::move(m)};
        Rng rng(1);
        const auto cands = candidates_kmeanspp(domain, 3, 1, rng);
        REQUIRE(cands.size() == 1);
        for (std::size_t c = 0; c < cands[0].size(); ++c)
            CHECK(cands[0].center(c)[0] == 2.0);
    }
    SUBCASE("fixed seed reproducibility") {
        Rng data_rng(2);
        const auto domain = test_util::random_points(data_rng, 40, 2);
        Rng r1(7), r2(7);
        const auto a = candidates_kmeanspp(domain, 4, 3, r1);
        const auto b = candidates_kmeanspp(domain, 4, 3, r2);
        for (std::size_t i = 0; i < a.size(); ++i)
            CHECK(a[i].matrix().data == b[i].matrix().data);
    }
    SUBCASE("some candidate differs from every planted clustering") {
        const auto inst = generate_benchmark(3, 2);
        const PointSet points = inst.as_point_set();
        Rng rng(3);
        const auto cands = candidates_kmeanspp(points, 3, 200, rng);
        bool found = false;
        for (const auto& c : cands) {
            const auto labels = assign(points, c).labels;
            bool differs_from_all = true;
            for (std::size_t a = 0; a < inst.alpha; ++a)
                if (clustering_distance(labels, inst.planted[a], 3) == 0.0)
                    differs_from_all = false;
            if (differs_from_all) found = true;
        }
        CHECK(found);
    }
}

TEST_CASE("convex hull candidates") {
    SUBCASE("single bicriteria center pins every candidate") {
        const auto bic = make_centers({{3.0, -1.0}});
        Rng rng(4);
        const auto cands = candidates_convex(bic, 2, 4, rng);
        for (const auto& c : cands)
            for (std::size_t i = 0; i < c.size(); ++i) {
                CHECK(c.center(i)[0] == doctest::Approx(3.0));
                CHECK(c.center(i)[1] == doctest::Approx(-1.0));
            }
    }
    SUBCASE("candidate mean approaches the bicriteria centroid") {
        const auto bic = make_centers({{0.0, 0.0}, {4.0, 0.0}, {0.0, 4.0}});
        Rng rng(5);
        const std::size_t count = 4000;
        const auto cands = candidates_convex(bic, 1, count, rng);
        double mx = 0.0, my = 0.0;
        for (const auto& c : cands) {
            mx += c.center(0)[0];
            my += c.center(0)[1];
        }
        mx /= count;
        my /= count;
        // Flat Dirichlet mean is the centroid (4/3, 4/3); component std is
        // below sqrt(2)/3 per coordinate times the center spread.
        const double se = 3.0 * 1.1 / std::sqrt(static_cast<double>(count));
        CHECK(std::abs(mx - 4.0 / 3.0) <= 3.0 * se);
        CHECK(std::abs(my - 4.0 / 3.0) <= 3.0 * se);
    }
}

TEST_CASE("meb candidates") {
    SUBCASE("radius zero collapses to the center") {
        Matrix m(5, 2, 1.0);
        const PointSet domain{std::move(m)};
        Rng rng(6);
        const auto cands = candidates_meb(domain, 3, 2, rng);
        for (const auto& c : cands)
            for (std::size_t i = 0; i < c.size(); ++i) {
                CHECK(c.center(i)[0] == doctest::Approx(1.0));
                CHECK(c.center(i)[1] == doctest::Approx(1.0));
            }
    }
    SUBCASE("samples stay inside the ball and follow the radial law") {
        Rng data_rng(7);
        const std::size_t d = 4;
        const auto domain = test_util::random_points(data_rng, 60, d);
        const Ball ball = approx_meb(domain, 100);
        Rng rng(8);
        const std::size_t count = 2000;
        const auto cands = candidates_meb(domain, 1, count, rng);
        double mean_fraction = 0.0;
        for (const auto& c : cands) {
            const double dist =
                std::sqrt(squared_distance(c.center(0), ball.center));
            CHECK(dist <= ball.radius + 1e-9);
            mean_fraction += dist / ball.radius;
        }
        mean_fraction /= count;
        // E[r/R] = d/(d+1); sd of the mean is below 1/sqrt(count).
        const double expected = static_cast<double>(d) / (d + 1.0);
        CHECK(std::abs(mean_fraction - expected) <=
              3.0 / std::sqrt(static_cast<double>(count)));
    }
}

TEST_CASE("evaluate_real") {
    Rng data_rng(9);
    const auto points = test_util::random_points(data_rng, 80, 3);
    const auto coreset = identity_coreset(points);
    EvalConfig cfg;
    cfg.seed = 17;
    const auto report = evaluate_real(points, coreset, 4, cfg);
    CHECK(report.max_distortion == doctest::Approx(1.0));
    CHECK(report.candidates.size() == 15);  // 3 methods x 5 candidates
    CHECK(report.max_distortion >= report.candidate_mean() - 1e-12);

    const auto again = evaluate_real(points, coreset, 4, cfg);
    REQUIRE(again.candidates.size() == report.candidates.size());
    for (std::size_t i = 0; i < report.candidates.size(); ++i)
        CHECK(again.candidates[i].distortion == report.candidates[i].distortion);
}

TEST_CASE("evaluate_benchmark: full instance scores 1 via planted probes") {
    const auto inst = generate_benchmark(3, 2);
    const auto coreset = identity_coreset(inst.as_point_set());
    EvalConfig cfg;
    const auto report = evaluate_benchmark(inst, coreset, cfg);
    CHECK(report.max_distortion == doctest::Approx(1.0).epsilon(1e-12));
    for (const auto& c : report.candidates)
        CHECK(c.distortion == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("evaluate_benchmark: omitting a planted cluster is caught") {
    const auto inst = generate_benchmark(3, 2);
    // Drop cluster 0 of clustering 0 and rescale the rest to total mass 9.
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < inst.size(); ++i)
        if (inst.planted[0][i] != 0) keep.push_back(i);
    Matrix pts(keep.size(), inst.dim());
    for (std::size_t i = 0; i < keep.size(); ++i) {
        const auto row = inst.matrix.row(keep[i]);
        std::copy(row.begin(), row.end(), pts.row(i).begin());
    }
    WeightedCoreset coreset{std::move(pts),
                            std::vector<double>(keep.size(), 1.5),
                            keep};
    EvalConfig cfg;
    const auto report = evaluate_benchmark(inst, coreset, cfg);
    // cost_A(S) = 2 * 2 + (2 + 2*3) = 12 against cost_coreset(S) = 6.
    CHECK(report.max_distortion == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("evaluate_benchmark: exact half coreset scores 1") {
    const auto inst = generate_benchmark(2, 2);
    // Points 0 and 3 cover each cluster of both clusterings exactly once.
    WeightedCoreset coreset{
        make_matrix({{0.5, -0.5, 0.5, -0.5}, {-0.5, 0.5, -0.5, 0.5}}),
        {2.0, 2.0},
        std::vector<std::size_t>{0, 3}};
    for (std::size_t j = 0; j < 4; ++j) {
        CHECK(coreset.points(0, j) == inst.matrix(0, j));
        CHECK(coreset.points(1, j) == inst.matrix(3, j));
    }
    EvalConfig cfg;
    const auto report = evaluate_benchmark(inst, coreset, cfg);
    CHECK(report.max_distortion == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("deficient-cluster cost ratio matches the closed form") {
    for (const auto& [k, alpha] : std::vector<std::pair<std::size_t, std::size_t>>{
             {3, 2}, {2, 3}, {5, 3}}) {
        const auto inst = generate_benchmark(k, alpha);
        const PointSet points = inst.as_point_set();
        const auto centers = planted_centers(inst, 0);

        // Cost of cluster 0's points against the other means only.
        Matrix others(k - 1, inst.dim());
        for (std::size_t j = 1; j < k; ++j) {
            const auto c = centers.center(j);
            std::copy(c.begin(), c.end(), others.row(j - 1).begin());
        }
        double cost_omitted = 0.0;
        double cost_own = 0.0;
        const CenterSet other_set{std::move(others)};
        for (std::size_t i = 0; i < inst.size(); ++i) {
            if (inst.planted[0][i] != 0) continue;
            double best = squared_distance(points.point(i), other_set.center(0));
            for (std::size_t j = 1; j < other_set.size(); ++j)
                best = std::min(best,
                                squared_distance(points.point(i), other_set.center(j)));
            cost_omitted += best;
            cost_own += squared_distance(points.point(i), centers.center(0));
        }
        const double cluster_cost = planted_cluster_cost(k, alpha);
        CHECK(cost_own == doctest::Approx(cluster_cost).epsilon(1e-9));

        const double kd = static_cast<double>(k);
        const double ad = static_cast<double>(alpha);
        const double identity =
            1.0 + 2.0 * std::pow(kd, ad - 1.0) / cluster_cost;
        const double simplified = 1.0 + 2.0 / (ad - 1.0) * kd / (kd - 1.0);
        CHECK(identity == doctest::Approx(simplified).epsilon(1e-12));
        CHECK(cost_omitted / cost_own ==
              doctest::Approx(identity).epsilon(1e-9));
    }
}

TEST_CASE("aggregate") {
    DistortionReport a;
    a.max_distortion = 1.0;
    DistortionReport b;
    b.max_distortion = 3.0;

    const std::vector<DistortionReport> single{a};
    const auto s = aggregate(single);
    CHECK(s.mean == 1.0);
    CHECK(s.stddev == 0.0);

    const std::vector<DistortionReport> both{a, b};
    const auto t = aggregate(both);
    CHECK(t.mean == doctest::Approx(2.0));
    CHECK(t.stddev == doctest::Approx(std::sqrt(2.0)));

    const std::vector<DistortionReport> swapped{b, a};
    const auto u = aggregate(swapped);
    CHECK(u.mean == t.mean);
    CHECK(u.stddev == t.stddev);
}
