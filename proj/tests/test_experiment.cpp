#include <doctest.h>

#include <stdexcept>

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "coresets/benchmark_gen.hpp"
#include "coresets/datagen.hpp"
#include "coresets/experiment.hpp"
#include "coresets/geometry.hpp"
#include "test_util.hpp"

using namespace coresets;

namespace {

// Blank out columns whose header mentions wall time; used to compare runs
// that should match apart from timings.
std::string strip_time_columns(const std::string& csv) {
    std::istringstream in(csv);
    std::string header;
    std::getline(in, header);
    std::vector<bool> keep;
    {
        std::istringstream hs(header);
        std::string col;
        while (std::getline(hs, col, ','))
            keep.push_back(col.find("time") == std::string::npos);
    }
    std::ostringstream out;
    std::string line;
    out << header << '\n';
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string col;
        std::size_t i = 0;
        bool first = true;
        while (std::getline(ls, col, ',')) {
            if (!first) out << ',';
            first = false;
            out << (i < keep.size() && keep[i] ? col : "");
            ++i;
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace

TEST_CASE("config parsing") {
    const std::string text =
        "# comment\n"
        "dataset = benchmark:k=3,alpha=2\n"
        "algorithms = sensitivity, bico\n"
        "k = 3\n"
        "m = 2 4\n"
        "repetitions = 2\n"
        "seed = 9\n";
    const auto cfg = parse_experiment_config_text(text);
    CHECK(cfg.dataset == "benchmark:k=3,alpha=2");
    REQUIRE(cfg.algorithms.size() == 2);
    CHECK(cfg.algorithms[0] == Algorithm::sensitivity);
    CHECK(cfg.algorithms[1] == Algorithm::bico);
    CHECK(cfg.m_values == std::vector<std::size_t>{2, 4});
    CHECK(cfg.repetitions == 2);
    CHECK(cfg.seed == 9);

    CHECK_THROWS_AS(parse_experiment_config_text("dataset = x\n"),
                    std::runtime_error);  // missing fields
    CHECK_THROWS_AS(parse_experiment_config_text(
                        "dataset = x\nalgorithms = bico\nk = 1\nm = 1\n"),
                    std::runtime_error);  // seed mandatory
}

TEST_CASE("single-cell experiment produces one record") {
    ExperimentConfig cfg;
    cfg.dataset = "benchmark:k=3,alpha=2";
    cfg.algorithms = {Algorithm::sensitivity};
    cfg.k_values = {3};
    cfg.m_values = {2};
    cfg.repetitions = 1;
    cfg.seed = 4;
    cfg.threads = 1;
    const auto result = run_experiment(cfg);
    REQUIRE(result.records.size() == 1);
    const auto& r = result.records[0];
    CHECK(r.error.empty());
    CHECK(r.distortion_max >= 1.0);
    CHECK(r.optimized_cost >= 0.0);
    CHECK(result.summary_csv.find("sensitivity") != std::string::npos);
}

TEST_CASE("experiment reruns are identical apart from timings") {
    ExperimentConfig cfg;
    cfg.dataset = "benchmark:k=3,alpha=2";
    cfg.algorithms = {Algorithm::sensitivity, Algorithm::streamkmpp,
                      Algorithm::bico};
    cfg.k_values = {3};
    cfg.m_values = {2, 3};
    cfg.repetitions = 2;
    cfg.seed = 31;
    const auto a = run_experiment(cfg);
    const auto b = run_experiment(cfg);
    CHECK(strip_time_columns(a.records_csv) == strip_time_columns(b.records_csv));
    CHECK(strip_time_columns(a.summary_csv) == strip_time_columns(b.summary_csv));
}

TEST_CASE("summary statistics recompute from record rows") {
    ExperimentConfig cfg;
    cfg.dataset = "benchmark:k=2,alpha=3";
    cfg.algorithms = {Algorithm::streamkmpp};
    cfg.k_values = {2};
    cfg.m_values = {2};
    cfg.repetitions = 4;
    cfg.seed = 8;
    const auto result = run_experiment(cfg);
    REQUIRE(result.records.size() == 4);
    double mean = 0.0;
    for (const auto& r : result.records) mean += r.distortion_max;
    mean /= 4.0;
    std::ostringstream expect;
    expect << mean;
    CHECK(result.summary_csv.find("streamkmpp") != std::string::npos);

    // Parse the summary's distortion_mean column and compare.
    std::istringstream in(result.summary_csv);
    std::string line;
    std::getline(in, line);  // header
    REQUIRE(std::getline(in, line));
    std::vector<std::string> cols;
    {
        std::istringstream ls(line);
        std::string c;
        while (std::getline(ls, c, ',')) cols.push_back(c);
    }
    REQUIRE(cols.size() >= 8);
    CHECK(std::stod(cols[6]) == doctest::Approx(mean).epsilon(1e-12));
}

TEST_CASE("per-record failures are recorded, run continues") {
    ExperimentConfig cfg;
    cfg.dataset = "benchmark:k=2,alpha=2";  // n = 4
    cfg.algorithms = {Algorithm::raymaker, Algorithm::sensitivity};
    cfg.k_values = {5};  // k > n stresses the constructions
    cfg.m_values = {1};
    cfg.repetitions = 1;
    cfg.seed = 2;
    const auto result = run_experiment(cfg);
    REQUIRE(result.records.size() == 2);
    // Whatever fails must carry a diagnostic; whatever passes must carry a
    // distortion.
    for (const auto& r : result.records) {
        if (r.error.empty()) CHECK(r.distortion_max >= 1.0);
        if (!r.error.empty()) CHECK(r.distortion_max == 0.0);
    }
}

TEST_CASE("movement constructions trail sampling on the benchmark") {
    ExperimentConfig cfg;
    cfg.dataset = "benchmark:k=10,alpha=3";
    cfg.algorithms = {Algorithm::sensitivity, Algorithm::bico, Algorithm::raymaker};
    cfg.k_values = {10};
    cfg.m_values = {50};
    cfg.repetitions = 5;
    cfg.seed = 23;
    const auto result = run_experiment(cfg);
    std::map<Algorithm, double> mean;
    for (const auto& r : result.records) {
        REQUIRE(r.error.empty());
        mean[r.algorithm] += r.distortion_max / 5.0;
    }
    CHECK(mean[Algorithm::sensitivity] < mean[Algorithm::bico]);
    CHECK(mean[Algorithm::sensitivity] < mean[Algorithm::raymaker]);
}

TEST_CASE("cost curve is monotone and hits zero at k = n") {
    MixtureConfig mix;
    mix.n = 60;
    mix.dim = 2;
    mix.components = 4;
    mix.seed = 12;
    const auto points = gaussian_mixture(mix);
    const auto curve = cost_curve(points, {1, 2, 4, 8, 16, 60}, 2, 5);
    REQUIRE(curve.size() == 6);
    for (std::size_t i = 1; i < curve.size(); ++i)
        CHECK(curve[i].cost <= curve[i - 1].cost + 1e-9);
    CHECK(curve.back().cost == doctest::Approx(0.0).epsilon(1e-12));
    const std::string csv = cost_curve_csv(curve);
    CHECK(csv.rfind("k,cost\n", 0) == 0);
}

TEST_CASE("benchmark cost curve flattens while a mixture's keeps dropping") {
    const auto inst = generate_benchmark(10, 3);  // n = 1000, k = 10
    const auto bench_curve = cost_curve(inst.as_point_set(), {10, 20}, 3, 7);
    const double bench_ratio = bench_curve[0].cost / bench_curve[1].cost;
    CHECK(bench_ratio <= 1.5);

    // Ten well-separated 1D blobs: doubling k splits every blob and roughly
    // halves the within-blob cost.
    Matrix m(1000, 1);
    Rng rng(77);
    for (std::size_t i = 0; i < 1000; ++i)
        m(i, 0) = 100.0 * static_cast<double>(i % 10) + rng.normal();
    const PointSet mixture{std::move(m)};
    const auto mix_curve = cost_curve(mixture, {10, 20}, 3, 7);
    const double mix_ratio = mix_curve[0].cost / mix_curve[1].cost;
    CHECK(mix_ratio >= 2.0);
    CHECK(bench_ratio < mix_ratio);
}
