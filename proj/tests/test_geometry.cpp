#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "coresets/benchmark_gen.hpp"
#include "coresets/geometry.hpp"
#include "coresets/kmeans.hpp"
#include "test_util.hpp"

using namespace coresets;
using test_util::make_centers;
using test_util::make_matrix;
using test_util::make_points;

TEST_CASE("squared_distance basics") {
    const std::vector<double> o{0.0, 0.0};
    CHECK(squared_distance(o, o) == 0.0);
    const std::vector<double> p{3.0, 4.0};
    CHECK(squared_distance(o, p) == 25.0);
    CHECK(squared_distance(p, o) == 25.0);
    const std::vector<double> q{1.0};
    CHECK_THROWS_AS(squared_distance(o, q), std::invalid_argument);
}

TEST_CASE("squared_distance on adjacent benchmark rows") {
    // Rows 0 and 1 of the k=2, alpha=3 instance differ by +-1 in the two
    // first-block coordinates.
    const auto inst = generate_benchmark(2, 3);
    CHECK(squared_distance(inst.matrix.row(0), inst.matrix.row(1)) ==
          doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("clustering_cost") {
    SUBCASE("point at its own center") {
        const auto points = make_points({{1.0, 2.0}});
        const auto centers = make_centers({{1.0, 2.0}});
        CHECK(clustering_cost(points, centers) == 0.0);
    }
    SUBCASE("two points, midpoint center") {
        const auto points = make_points({{0.0, 0.0}, {2.0, 0.0}});
        const auto centers = make_centers({{1.0, 0.0}});
        CHECK(clustering_cost(points, centers) == doctest::Approx(2.0));
    }
    SUBCASE("planted centers of the k=3, alpha=2 instance cost 6") {
        const auto inst = generate_benchmark(3, 2);
        const auto centers = planted_centers(inst, 0);
        CHECK(clustering_cost(inst.as_point_set(), centers) ==
              doctest::Approx(6.0).epsilon(1e-12));
        // Matches the closed form, three clusters of cost 2 each.
        CHECK(planted_cluster_cost(3, 2) == doctest::Approx(2.0));
    }
    SUBCASE("dimension mismatch") {
        const auto points = make_points({{0.0, 0.0}});
        const auto centers = make_centers({{0.0}});
        CHECK_THROWS_AS(clustering_cost(points, centers), std::invalid_argument);
    }
    SUBCASE("empty center set is unconstructible") {
        CHECK_THROWS_AS(CenterSet(Matrix(0, 2)), std::invalid_argument);
    }
}

TEST_CASE("centroid") {
    SUBCASE("singleton") {
        const auto points = make_points({{0.0, 0.0}});
        const std::vector<std::size_t> subset{0};
        const auto mean = centroid(points, subset);
        CHECK(mean == std::vector<double>{0.0, 0.0});
    }
    SUBCASE("two unit-weight points") {
        const auto points = make_points({{0.0, 0.0}, {2.0, 0.0}});
        const auto mean = centroid(points);
        CHECK(mean[0] == doctest::Approx(1.0));
        CHECK(mean[1] == doctest::Approx(0.0));
    }
    SUBCASE("first planted cluster mean of the k=3, alpha=2 instance") {
        const auto inst = generate_benchmark(3, 2);
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < inst.size(); ++i)
            if (inst.planted[0][i] == 0) members.push_back(i);
        const auto mean = centroid(inst.as_point_set(), members);
        const std::vector<double> expected{2.0 / 3, -1.0 / 3, -1.0 / 3, 0, 0, 0};
        REQUIRE(mean.size() == expected.size());
        for (std::size_t j = 0; j < mean.size(); ++j)
            CHECK(mean[j] == doctest::Approx(expected[j]).epsilon(1e-12));
    }
    SUBCASE("empty subset") {
        const auto points = make_points({{0.0}});
        CHECK_THROWS_AS(centroid(points, std::vector<std::size_t>{}),
                        std::invalid_argument);
    }
    SUBCASE("zero total weight") {
        PointSet points(make_matrix({{0.0}, {1.0}}), {0.0, 1.0});
        const std::vector<std::size_t> subset{0};
        CHECK_THROWS_AS(centroid(points, subset), std::invalid_argument);
    }
}

TEST_CASE("assign") {
    SUBCASE("single center") {
        const auto points = make_points({{0.0}, {5.0}, {-3.0}});
        const auto a = assign(points, make_centers({{1.0}}));
        CHECK(a.labels == std::vector<std::size_t>{0, 0, 0});
    }
    SUBCASE("two matched centers") {
        const auto points = make_points({{0.0}, {10.0}});
        const auto a = assign(points, make_centers({{0.0}, {10.0}}));
        CHECK(a.labels == std::vector<std::size_t>{0, 1});
        CHECK(a.sq_dists[0] == 0.0);
    }
    SUBCASE("ties break toward the lowest index") {
        const auto points = make_points({{0.0}});
        const auto a = assign(points, make_centers({{1.0}, {-1.0}}));
        CHECK(a.labels[0] == 0);
    }
    SUBCASE("stored distances match recomputation") {
        Rng rng(3);
        const auto points = test_util::random_points(rng, 30, 4);
        const auto centers = test_util::random_points(rng, 5, 4);
        const auto a = assign(points, CenterSet(centers.matrix()));
        for (std::size_t i = 0; i < points.size(); ++i) {
            const double recomputed = squared_distance(
                points.point(i), centers.point(a.labels[i]));
            CHECK(a.sq_dists[i] == doctest::Approx(recomputed).epsilon(1e-9));
        }
    }
}

TEST_CASE("mean decomposition identity holds on random inputs") {
    Rng rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + rng.index(50);
        const std::size_t d = 1 + rng.index(10);
        const auto points = test_util::random_points(rng, n, d);
        std::vector<double> c(d);
        for (double& v : c) v = rng.uniform(-5.0, 5.0);

        const auto mean = centroid(points);
        double lhs = 0.0, spread = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            lhs += squared_distance(points.point(i), c);
            spread += squared_distance(points.point(i), mean);
        }
        const double rhs =
            static_cast<double>(n) * squared_distance(mean, c) + spread;
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
    }
}

TEST_CASE("cost is monotone under center addition") {
    Rng rng(13);
    const auto points = test_util::random_points(rng, 40, 3);
    Matrix centers(1, 3);
    for (double& v : centers.data) v = rng.uniform(-5.0, 5.0);
    double prev = clustering_cost(points, CenterSet(centers));
    for (int extra = 0; extra < 5; ++extra) {
        for (std::size_t j = 0; j < 3; ++j)
            centers.data.push_back(rng.uniform(-5.0, 5.0));
        centers.rows += 1;
        const double cost = clustering_cost(points, CenterSet(centers));
        CHECK(cost <= prev + 1e-12);
        prev = cost;
    }
}

TEST_CASE("centers at all distinct points give zero cost") {
    Rng rng(29);
    const auto points = test_util::random_points(rng, 25, 4);
    CHECK(clustering_cost(points, CenterSet(points.matrix())) == 0.0);
}

TEST_CASE("a Lloyd step never increases the cost") {
    Rng rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const auto points = test_util::random_points(rng, 60, 2);
        SeedConfig cfg;
        cfg.k = 4;
        const CenterSet init = kmeanspp_seed(points, cfg, rng);
        const double before = clustering_cost(points, init);

        const Assignment a = assign(points, init);
        Matrix means(4, 2, 0.0);
        std::vector<double> mass(4, 0.0);
        for (std::size_t i = 0; i < points.size(); ++i) {
            auto row = means.row(a.labels[i]);
            const auto p = points.point(i);
            for (std::size_t j = 0; j < 2; ++j) row[j] += p[j];
            mass[a.labels[i]] += 1.0;
        }
        for (std::size_t c = 0; c < 4; ++c) {
            if (mass[c] == 0.0) {
                // keep the old center for empty clusters
                const auto old = init.center(c);
                std::copy(old.begin(), old.end(), means.row(c).begin());
            } else {
                for (double& v : means.row(c)) v /= mass[c];
            }
        }
        CHECK(clustering_cost(points, CenterSet(means)) <= before + 1e-9);
    }
}

TEST_CASE("point set validation") {
    CHECK_THROWS_AS(PointSet(Matrix(0, 2)), std::invalid_argument);
    CHECK_THROWS_AS(PointSet(Matrix(2, 0)), std::invalid_argument);
    Matrix bad(1, 1);
    bad(0, 0) = std::nan("");
    CHECK_THROWS_AS(PointSet(std::move(bad)), std::invalid_argument);
    CHECK_THROWS_AS(PointSet(make_matrix({{1.0}}), {-1.0}), std::invalid_argument);
}
