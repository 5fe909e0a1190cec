#include "coresets/kmeans.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "coresets/geometry.hpp"

namespace coresets {

namespace {

// Refresh D^2 against a newly added center.
void relax_against(const PointSet& points, std::span<const double> center,
                   std::vector<double>& sq_dists) {
    for (std::size_t i = 0; i < points.size(); ++i) {
        const double d = squared_distance(points.point(i), center);
        if (d < sq_dists[i]) sq_dists[i] = d;
    }
}

double weighted_potential(const PointSet& points,
                          const std::vector<double>& sq_dists) {
    double total = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i)
        total += points.weight(i) * sq_dists[i];
    return total;
}

std::size_t draw_weighted_index(const PointSet& points, Rng& rng) {
    if (points.total_weight() > 0.0)
        return sample_discrete(rng, points.weights(), points.total_weight());
    return rng.index(points.size());
}

}  // namespace

void kmeanspp_extend(const PointSet& points, std::vector<std::size_t>& centers,
                     std::vector<double>& sq_dists, std::size_t extra, Rng& rng) {
    std::vector<double> masses(points.size());
    for (std::size_t round = 0; round < extra; ++round) {
        double total = 0.0;
        for (std::size_t i = 0; i < points.size(); ++i) {
            masses[i] = points.weight(i) * sq_dists[i];
            total += masses[i];
        }
        std::size_t chosen;
        if (total > 0.0) {
            chosen = sample_discrete(rng, masses, total);
        } else {
            // All points covered exactly: fall back to a uniform draw.
            chosen = rng.index(points.size());
        }
        centers.push_back(chosen);
        relax_against(points, points.point(chosen), sq_dists);
    }
}

std::vector<std::size_t> kmeanspp_seed_indices(const PointSet& points,
                                               const SeedConfig& cfg, Rng& rng) {
    if (cfg.k == 0) throw std::invalid_argument("kmeanspp_seed: k must be >= 1");
    if (cfg.candidate_pool == 0)
        throw std::invalid_argument("kmeanspp_seed: candidate_pool must be >= 1");

    std::vector<std::size_t> centers;
    centers.reserve(cfg.k);
    std::vector<double> sq_dists(points.size(),
                                 std::numeric_limits<double>::infinity());

    const std::size_t first = draw_weighted_index(points, rng);
    centers.push_back(first);
    for (std::size_t i = 0; i < points.size(); ++i)
        sq_dists[i] = squared_distance(points.point(i), points.point(first));

    if (cfg.candidate_pool == 1) {
        kmeanspp_extend(points, centers, sq_dists, cfg.k - 1, rng);
        return centers;
    }

    // Greedy variant: per round draw candidate_pool candidates and keep the
    // one whose addition lowers the potential the most.
    std::vector<double> masses(points.size());
    std::vector<double> trial(points.size());
    for (std::size_t round = 1; round < cfg.k; ++round) {
        double total = 0.0;
        for (std::size_t i = 0; i < points.size(); ++i) {
            masses[i] = points.weight(i) * sq_dists[i];
            total += masses[i];
        }
        std::size_t best_candidate = 0;
        double best_potential = std::numeric_limits<double>::infinity();
        std::vector<double> best_dists;
        for (std::size_t c = 0; c < cfg.candidate_pool; ++c) {
            const std::size_t candidate =
                total > 0.0 ? sample_discrete(rng, masses, total)
                            : rng.index(points.size());
            trial = sq_dists;
            relax_against(points, points.point(candidate), trial);
            const double pot = weighted_potential(points, trial);
            if (pot < best_potential) {
                best_potential = pot;
                best_candidate = candidate;
                best_dists = trial;
            }
        }
        centers.push_back(best_candidate);
        sq_dists = std::move(best_dists);
    }
    return centers;
}

CenterSet centers_from_indices(const PointSet& points,
                               const std::vector<std::size_t>& indices) {
    Matrix m(indices.size(), points.dim());
    for (std::size_t i = 0; i < indices.size(); ++i) {
        const auto p = points.point(indices[i]);
        std::copy(p.begin(), p.end(), m.row(i).begin());
    }
    return CenterSet(std::move(m));
}

CenterSet kmeanspp_seed(const PointSet& points, const SeedConfig& cfg, Rng& rng) {
    return centers_from_indices(points, kmeanspp_seed_indices(points, cfg, rng));
}

CenterSet kmeanspp_seed(const PointSet& points, const SeedConfig& cfg) {
    Rng rng(cfg.seed);
    return kmeanspp_seed(points, cfg, rng);
}

LloydResult lloyd(const PointSet& points, const CenterSet& init,
                  std::size_t max_iters, double rel_tol) {
    if (points.dim() != init.dim())
        throw std::invalid_argument("lloyd: dimension mismatch");
    const std::size_t k = init.size();
    Matrix centers = init.matrix();

    Assignment a = assign(points, CenterSet(centers));
    double cost = assignment_cost(points, a);
    std::size_t iters = 0;

    for (std::size_t it = 0; it < max_iters; ++it) {
        // Means of the current assignment.
        Matrix next(k, points.dim(), 0.0);
        std::vector<double> mass(k, 0.0);
        for (std::size_t i = 0; i < points.size(); ++i) {
            const double w = points.weight(i);
            const auto p = points.point(i);
            auto row = next.row(a.labels[i]);
            for (std::size_t j = 0; j < p.size(); ++j) row[j] += w * p[j];
            mass[a.labels[i]] += w;
        }
        for (std::size_t c = 0; c < k; ++c) {
            if (mass[c] > 0.0) {
                for (double& v : next.row(c)) v /= mass[c];
            } else {
                // Empty cluster: restart it at the point currently paying
                // the largest distance to its center.
                std::size_t far = 0;
                double far_d = -1.0;
                for (std::size_t i = 0; i < points.size(); ++i) {
                    if (a.sq_dists[i] > far_d) {
                        far_d = a.sq_dists[i];
                        far = i;
                    }
                }
                const auto p = points.point(far);
                std::copy(p.begin(), p.end(), next.row(c).begin());
                a.sq_dists[far] = 0.0;  // so a second empty cluster steals a different point
            }
        }

        Assignment next_a = assign(points, CenterSet(next));
        const double next_cost = assignment_cost(points, next_a);
        if (next_cost > cost) break;  // numerical guard; Lloyd never increases
        const double improvement = cost > 0.0 ? (cost - next_cost) / cost : 0.0;
        if (next_cost < cost) ++iters;
        centers = std::move(next);
        a = std::move(next_a);
        cost = next_cost;
        if (improvement < rel_tol) break;
    }
    return LloydResult{CenterSet(std::move(centers)), cost, iters};
}

CenterSet bicriteria(const PointSet& points, std::size_t k, double beta, Rng& rng,
                     std::size_t refine_iters) {
    if (beta < 1.0) throw std::invalid_argument("bicriteria: beta must be >= 1");
    SeedConfig cfg;
    cfg.k = static_cast<std::size_t>(std::ceil(beta * static_cast<double>(k)));
    CenterSet seeds = kmeanspp_seed(points, cfg, rng);
    if (refine_iters == 0) return seeds;
    return lloyd(points, seeds, refine_iters).centers;
}

std::vector<std::size_t> bicriteria_indices(const PointSet& points, std::size_t k,
                                            double beta, Rng& rng) {
    if (beta < 1.0) throw std::invalid_argument("bicriteria: beta must be >= 1");
    SeedConfig cfg;
    cfg.k = static_cast<std::size_t>(std::ceil(beta * static_cast<double>(k)));
    return kmeanspp_seed_indices(points, cfg, rng);
}

}  // namespace coresets
