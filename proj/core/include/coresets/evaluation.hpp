#ifndef CORESETS_EVALUATION_HPP
#define CORESETS_EVALUATION_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coresets/benchmark_gen.hpp"
#include "coresets/point_set.hpp"
#include "coresets/rng.hpp"

namespace coresets {

enum class CandidateMethod { kmeanspp, convex_hull, meb };

std::string to_string(CandidateMethod m);

struct EvalConfig {
    std::size_t candidates_per_method = 5;
    std::vector<CandidateMethod> methods = {CandidateMethod::kmeanspp,
                                            CandidateMethod::convex_hull,
                                            CandidateMethod::meb};
    /// Deficiency thresholds probed by the benchmark evaluator.
    std::vector<double> delta_grid;
    std::size_t repetitions = 10;
    std::uint64_t seed = 0;
    /// Candidate generators sample from the coreset by default; this flag
    /// switches them to the original data.
    bool candidates_on_input = false;

    EvalConfig();
};

/// 0.05, 0.10, ..., 0.95.
std::vector<double> default_delta_grid();

struct CandidateResult {
    std::string label;
    double distortion = 1.0;
};

/// Per-run evaluation outcome: every probed candidate (or benchmark probe)
/// with its distortion, and the maximum, which is the run's reported lower
/// bound on the true distortion.
struct DistortionReport {
    std::vector<CandidateResult> candidates;
    double max_distortion = 1.0;
    std::string max_label;
    bool degenerate = false;  // some candidate produced a non-positive cost

    double candidate_mean() const;
    /// Max over candidates whose label starts with the given method name;
    /// 0 when none match.
    double method_max(std::string_view method) const;
};

struct AggregateStats {
    double mean = 0.0;
    double stddev = 0.0;
};

/// The two-sided cost ratio max(cost_A/cost_W, cost_W/cost_A); infinity
/// when either cost is non-positive (degenerate coreset or cover).
double distortion(double cost_full, double cost_coreset);

/// Distortion of one candidate solution measured between the data and the
/// coreset, using unnormalized weighted costs.
double distortion(const PointSet& points, const WeightedCoreset& coreset,
                  const CenterSet& centers);

/// `count` independent k-means++ seedings over the domain (no Lloyd).
std::vector<CenterSet> candidates_kmeanspp(const PointSet& domain, std::size_t k,
                                           std::size_t count, Rng& rng);

/// Candidates of k centers, each a flat-Dirichlet convex combination of the
/// bicriteria centers.
std::vector<CenterSet> candidates_convex(const CenterSet& bicriteria_centers,
                                         std::size_t k, std::size_t count,
                                         Rng& rng);

/// Candidates of k centers drawn uniformly from the approximate minimum
/// enclosing ball of the domain.
std::vector<CenterSet> candidates_meb(const PointSet& domain, std::size_t k,
                                      std::size_t count, Rng& rng,
                                      std::size_t meb_iters = 100);

/// Candidate-solution evaluation for generic data: generates candidates per
/// enabled method and reports every distortion plus the maximum.
DistortionReport evaluate_real(const PointSet& points,
                               const WeightedCoreset& coreset, std::size_t k,
                               const EvalConfig& cfg);

/// Deficiency evaluation on a generated instance: for every planted
/// clustering and every delta, clusters whose coreset mass falls below
/// (1-delta) of their true size lose their center; the surviving means form
/// a probe solution whose distortion is computed by full evaluation. The
/// report carries the max over all distinct probes. When no threshold
/// produces a proper deficient subset, the full planted solutions are
/// probed instead.
DistortionReport evaluate_benchmark(const BenchmarkInstance& instance,
                                    const WeightedCoreset& coreset,
                                    const EvalConfig& cfg);

/// Mean and (n-1)-denominator standard deviation of the per-run maxima.
AggregateStats aggregate(std::span<const DistortionReport> reports);

}  // namespace coresets

#endif  // CORESETS_EVALUATION_HPP
