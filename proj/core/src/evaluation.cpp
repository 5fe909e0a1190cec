#include "coresets/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <stdexcept>

#include "coresets/geometry.hpp"
#include "coresets/kmeans.hpp"
#include "coresets/meb.hpp"

namespace coresets {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string label_of(CandidateMethod m, std::size_t i) {
    return to_string(m) + "#" + std::to_string(i);
}

// Candidate generation needs a nonnegative-weight domain even when weight
// clamping was disabled on the coreset.
PointSet candidate_domain(const WeightedCoreset& coreset) {
    std::vector<double> w = coreset.weights;
    for (double& x : w) x = std::max(0.0, x);
    return PointSet(coreset.points, std::move(w));
}

}  // namespace

std::string to_string(CandidateMethod m) {
    switch (m) {
        case CandidateMethod::kmeanspp: return "kmeanspp";
        case CandidateMethod::convex_hull: return "convex_hull";
        case CandidateMethod::meb: return "meb";
    }
    return "unknown";
}

std::vector<double> default_delta_grid() {
    std::vector<double> grid;
    for (int i = 1; i <= 19; ++i) grid.push_back(0.05 * i);
    return grid;
}

EvalConfig::EvalConfig() : delta_grid(default_delta_grid()) {}

double DistortionReport::candidate_mean() const {
    if (candidates.empty()) return 1.0;
    double acc = 0.0;
    for (const auto& c : candidates) acc += c.distortion;
    return acc / static_cast<double>(candidates.size());
}

double DistortionReport::method_max(std::string_view method) const {
    double best = 0.0;
    for (const auto& c : candidates)
        if (c.label.rfind(method, 0) == 0) best = std::max(best, c.distortion);
    return best;
}

double distortion(double cost_full, double cost_coreset) {
    if (!(cost_full > 0.0) || !(cost_coreset > 0.0)) return kInf;
    return std::max(cost_full / cost_coreset, cost_coreset / cost_full);
}

double distortion(const PointSet& points, const WeightedCoreset& coreset,
                  const CenterSet& centers) {
    return distortion(clustering_cost(points, centers),
                      clustering_cost(coreset, centers));
}

std::vector<CenterSet> candidates_kmeanspp(const PointSet& domain, std::size_t k,
                                           std::size_t count, Rng& rng) {
    std::vector<CenterSet> out;
    out.reserve(count);
    SeedConfig cfg;
    cfg.k = std::min(k, domain.size());
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(kmeanspp_seed(domain, cfg, rng));
    return out;
}

std::vector<CenterSet> candidates_convex(const CenterSet& bicriteria_centers,
                                         std::size_t k, std::size_t count,
                                         Rng& rng) {
    const std::size_t m = bicriteria_centers.size();
    const std::size_t d = bicriteria_centers.dim();
    std::vector<CenterSet> out;
    out.reserve(count);
    std::vector<double> lambda(m);
    for (std::size_t i = 0; i < count; ++i) {
        Matrix centers(k, d, 0.0);
        for (std::size_t c = 0; c < k; ++c) {
            // Flat Dirichlet via normalized Exp(1) draws.
            double total = 0.0;
            for (double& l : lambda) {
                l = -std::log(1.0 - rng.uniform());
                total += l;
            }
            auto row = centers.row(c);
            for (std::size_t j = 0; j < m; ++j) {
                const double coeff = lambda[j] / total;
                const auto b = bicriteria_centers.center(j);
                for (std::size_t t = 0; t < d; ++t) row[t] += coeff * b[t];
            }
        }
        out.emplace_back(std::move(centers));
    }
    return out;
}

std::vector<CenterSet> candidates_meb(const PointSet& domain, std::size_t k,
                                      std::size_t count, Rng& rng,
                                      std::size_t meb_iters) {
    const Ball ball = approx_meb(domain, meb_iters);
    const std::size_t d = domain.dim();
    std::vector<CenterSet> out;
    out.reserve(count);
    std::vector<double> dir(d);
    for (std::size_t i = 0; i < count; ++i) {
        Matrix centers(k, d);
        for (std::size_t c = 0; c < k; ++c) {
            double norm_sq = 0.0;
            do {
                norm_sq = 0.0;
                for (double& v : dir) {
                    v = rng.normal();
                    norm_sq += v * v;
                }
            } while (norm_sq == 0.0);
            // Uniform in the ball: isotropic direction, radius R * U^(1/d).
            const double radius =
                ball.radius *
                std::pow(rng.uniform(), 1.0 / static_cast<double>(d));
            const double scale = radius / std::sqrt(norm_sq);
            auto row = centers.row(c);
            for (std::size_t t = 0; t < d; ++t)
                row[t] = ball.center[t] + scale * dir[t];
        }
        out.emplace_back(std::move(centers));
    }
    return out;
}

namespace {

void validate(const EvalConfig& cfg) {
    if (cfg.candidates_per_method == 0)
        throw std::invalid_argument("EvalConfig: candidates_per_method must be >= 1");
    for (double delta : cfg.delta_grid)
        if (!(delta > 0.0 && delta < 1.0))
            throw std::invalid_argument("EvalConfig: deltas must lie in (0, 1)");
}

}  // namespace

DistortionReport evaluate_real(const PointSet& points,
                               const WeightedCoreset& coreset, std::size_t k,
                               const EvalConfig& cfg) {
    validate(cfg);
    if (points.dim() != coreset.dim())
        throw std::invalid_argument("evaluate_real: dimension mismatch");
    Rng rng(mix_seed(cfg.seed, 0xeba1ULL));
    const PointSet domain =
        cfg.candidates_on_input ? points : candidate_domain(coreset);

    DistortionReport report;
    report.max_distortion = 0.0;
    for (CandidateMethod method : cfg.methods) {
        std::vector<CenterSet> candidates;
        switch (method) {
            case CandidateMethod::kmeanspp:
                candidates =
                    candidates_kmeanspp(domain, k, cfg.candidates_per_method, rng);
                break;
            case CandidateMethod::convex_hull: {
                const CenterSet bic = bicriteria(domain, k, 2.0, rng);
                candidates =
                    candidates_convex(bic, k, cfg.candidates_per_method, rng);
                break;
            }
            case CandidateMethod::meb:
                candidates =
                    candidates_meb(domain, k, cfg.candidates_per_method, rng);
                break;
        }
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            const double dist = distortion(points, coreset, candidates[i]);
            report.candidates.push_back({label_of(method, i), dist});
            if (std::isinf(dist)) report.degenerate = true;
            if (dist > report.max_distortion) {
                report.max_distortion = dist;
                report.max_label = report.candidates.back().label;
            }
        }
    }
    if (report.candidates.empty()) {
        report.max_distortion = 1.0;
    }
    return report;
}

DistortionReport evaluate_benchmark(const BenchmarkInstance& instance,
                                    const WeightedCoreset& coreset,
                                    const EvalConfig& cfg) {
    validate(cfg);
    if (instance.dim() != coreset.dim())
        throw std::invalid_argument("evaluate_benchmark: dimension mismatch");
    const std::size_t k = instance.k;
    const std::size_t alpha = instance.alpha;
    const std::size_t n = instance.size();
    const std::size_t m = coreset.size();
    const PointSet data = instance.as_point_set();
    const double true_size =
        static_cast<double>(n) / static_cast<double>(k);  // k^(alpha-1)

    DistortionReport report;
    report.max_distortion = 0.0;

    auto push = [&](const std::string& label, double dist) {
        report.candidates.push_back({label, dist});
        if (std::isinf(dist)) report.degenerate = true;
        if (dist > report.max_distortion) {
            report.max_distortion = dist;
            report.max_label = label;
        }
    };

    bool any_probe = false;
    for (std::size_t a = 0; a < alpha; ++a) {
        const CenterSet centers = planted_centers(instance, a);

        // Squared distances of every data and coreset point to each mean.
        Matrix data_d2(n, k), core_d2(m, k);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < k; ++j)
                data_d2(i, j) = squared_distance(data.point(i), centers.center(j));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < k; ++j)
                core_d2(i, j) =
                    squared_distance(coreset.points.row(i), centers.center(j));

        // Coreset membership: source points inherit their planted cluster,
        // synthetic points go to the nearest mean.
        std::vector<double> mass(k, 0.0);
        for (std::size_t i = 0; i < m; ++i) {
            std::size_t cluster;
            if (coreset.source_indices) {
                cluster = instance.planted[a][(*coreset.source_indices)[i]];
            } else {
                cluster = 0;
                double best = core_d2(i, 0);
                for (std::size_t j = 1; j < k; ++j)
                    if (core_d2(i, j) < best) {
                        best = core_d2(i, j);
                        cluster = j;
                    }
            }
            mass[cluster] += coreset.weights[i];
        }

        auto probe_cost = [&](const std::vector<bool>& deficient) {
            double cost_full = 0.0, cost_core = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                double best = kInf;
                for (std::size_t j = 0; j < k; ++j)
                    if (!deficient[j]) best = std::min(best, data_d2(i, j));
                cost_full += best;
            }
            for (std::size_t i = 0; i < m; ++i) {
                double best = kInf;
                for (std::size_t j = 0; j < k; ++j)
                    if (!deficient[j]) best = std::min(best, core_d2(i, j));
                cost_core += coreset.weights[i] * best;
            }
            return std::pair{cost_full, cost_core};
        };

        std::map<std::vector<bool>, bool> seen;
        for (double delta : cfg.delta_grid) {
            std::vector<bool> deficient(k, false);
            std::size_t num_deficient = 0;
            for (std::size_t j = 0; j < k; ++j) {
                if (mass[j] < true_size * (1.0 - delta)) {
                    deficient[j] = true;
                    ++num_deficient;
                }
            }
            if (num_deficient == 0 || num_deficient == k) continue;
            if (!seen.emplace(deficient, true).second) continue;  // same probe
            any_probe = true;
            const auto [cost_full, cost_core] = probe_cost(deficient);
            char label[64];
            std::snprintf(label, sizeof(label), "planted a=%zu delta=%.2f", a,
                          delta);
            push(label, distortion(cost_full, cost_core));
        }
    }

    if (!any_probe) {
        // Nothing deficient (or everything was): probe the full planted
        // solutions themselves.
        for (std::size_t a = 0; a < alpha; ++a) {
            const CenterSet centers = planted_centers(instance, a);
            const double cost_full = clustering_cost(data, centers);
            const double cost_core = clustering_cost(coreset, centers);
            push("planted a=" + std::to_string(a) + " full",
                 distortion(cost_full, cost_core));
        }
    }
    return report;
}

AggregateStats aggregate(std::span<const DistortionReport> reports) {
    if (reports.empty())
        throw std::invalid_argument("aggregate: need at least one report");
    AggregateStats stats;
    for (const auto& r : reports) stats.mean += r.max_distortion;
    stats.mean /= static_cast<double>(reports.size());
    if (reports.size() > 1) {
        double acc = 0.0;
        for (const auto& r : reports) {
            const double diff = r.max_distortion - stats.mean;
            acc += diff * diff;
        }
        stats.stddev = std::sqrt(acc / static_cast<double>(reports.size() - 1));
    }
    return stats;
}

}  // namespace coresets
