#ifndef CORESETS_EXPERIMENT_HPP
#define CORESETS_EXPERIMENT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coresets/dataset_io.hpp"
#include "coresets/evaluation.hpp"
#include "coresets/point_set.hpp"

namespace coresets {

enum class Algorithm { sensitivity, group, streamkmpp, bico, raymaker };

std::string to_string(Algorithm a);
Algorithm algorithm_from_string(const std::string& name);

struct Preprocessing {
    enum class Kind { none, pca, random } kind = Kind::none;
    std::size_t target_dim = 0;

    std::string to_string() const;
};

/// Declarative experiment description; parsed from a key-value text file
/// (see parse_experiment_config) or built programmatically.
struct ExperimentConfig {
    /// A csv path or an inline spec "benchmark:k=10,alpha=3".
    std::string dataset;
    DatasetFormat format = DatasetFormat::csv_dense;
    /// Sidecar path for file-based benchmark datasets; when set (or when the
    /// dataset is an inline benchmark spec) the deficiency evaluator runs
    /// instead of candidate generation.
    std::string benchmark_meta;
    Preprocessing preprocessing;
    std::vector<Algorithm> algorithms;
    std::vector<std::size_t> k_values;
    /// Coreset sizes are T = m * k, capped at n.
    std::vector<std::size_t> m_values;
    std::size_t repetitions = 10;
    std::uint64_t seed = 0;
    std::string output_dir;
    std::size_t threads = 0;  // 0 = hardware concurrency
    std::size_t candidates_per_method = 5;
    std::vector<CandidateMethod> methods = {CandidateMethod::kmeanspp,
                                            CandidateMethod::convex_hull,
                                            CandidateMethod::meb};
    /// Ray Maker: 1D clusters per ray; the ray count is T/(k*g) rounded up.
    std::size_t raymaker_g = 8;
    /// Optional wall-clock cutoff per record; 0 means unlimited.
    double record_timeout_s = 0.0;
};

ExperimentConfig parse_experiment_config(const std::string& path);
ExperimentConfig parse_experiment_config_text(const std::string& text);

struct ExperimentRecord {
    std::string dataset;
    Algorithm algorithm = Algorithm::sensitivity;
    std::string preprocessing;
    std::size_t k = 0;
    std::size_t m = 0;
    std::size_t repetition = 0;
    std::uint64_t seed = 0;  // derived per-record seed
    double distortion_max = 0.0;
    /// Per-method maxima; NaN when the method did not run (benchmark
    /// evaluation has probes rather than candidate methods).
    double distortion_kmeanspp = 0.0;
    double distortion_convex_hull = 0.0;
    double distortion_meb = 0.0;
    /// Lloyd-on-coreset solution cost, evaluated on the full data.
    double optimized_cost = 0.0;
    double construction_seconds = 0.0;
    double eval_seconds = 0.0;
    std::string error;
};

struct ExperimentResult {
    std::vector<ExperimentRecord> records;
    std::string records_csv;
    std::string summary_csv;
};

/// Run every (algorithm, k, m, repetition) cell: build the coreset (timed),
/// evaluate its distortion (deficiency probes on benchmark data, candidate
/// methods otherwise), optimize on the coreset and report that solution's
/// cost on the full data. Records are computed in a worker pool with
/// per-record derived seeds, emitted in canonical order, and written to
/// records.csv / summary.csv under output_dir when set. Per-record failures
/// land in the error column without aborting the run.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

struct CostCurvePoint {
    std::size_t k = 0;
    double cost = 0.0;
};

/// Best-of-seeds Lloyd cost for each k. Within one seed the k values chain:
/// the next initialization is the previous Lloyd solution extended by D^2
/// sampling, so each per-seed curve (and the best-of-seeds envelope) is
/// monotone non-increasing.
std::vector<CostCurvePoint> cost_curve(const PointSet& points,
                                       std::vector<std::size_t> k_values,
                                       std::size_t seeds, std::uint64_t seed);

std::string cost_curve_csv(const std::vector<CostCurvePoint>& curve);

}  // namespace coresets

#endif  // CORESETS_EXPERIMENT_HPP
