#include "coresets/ray_maker.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "coresets/geometry.hpp"
#include "coresets/kmeans.hpp"
#include "coresets/kmeans1d.hpp"
#include "coresets/rng.hpp"

namespace coresets {

namespace {

struct Ray {
    std::size_t center = 0;
    std::vector<double> direction;
};

// Residual distance after projecting onto the half-line; negative
// projections snap to the apex (s = 0).
double ray_distance_sq(std::span<const double> p, std::span<const double> c,
                       const std::vector<double>& u, double* projection) {
    double dot = 0.0, norm_sq = 0.0;
    for (std::size_t j = 0; j < p.size(); ++j) {
        const double diff = p[j] - c[j];
        dot += diff * u[j];
        norm_sq += diff * diff;
    }
    const double s = std::max(0.0, dot);
    if (projection) *projection = s;
    return std::max(0.0, norm_sq - s * s);
}

}  // namespace

WeightedCoreset raymaker_coreset(const PointSet& points, const RayConfig& cfg,
                                 RayDiagnostics* diagnostics) {
    if (cfg.k == 0 || cfg.rays_per_center == 0 || cfg.per_ray_centers == 0)
        throw std::invalid_argument("raymaker_coreset: k, rays, centers must be >= 1");
    Rng rng(cfg.seed);

    SeedConfig seed_cfg;
    seed_cfg.k = std::min(cfg.k, points.size());
    const CenterSet seeds = kmeanspp_seed(points, seed_cfg, rng);
    const CenterSet centers = lloyd(points, seeds, 25, 1e-4).centers;

    // Random unit directions, center-major order.
    const std::size_t num_rays = centers.size() * cfg.rays_per_center;
    std::vector<Ray> rays(num_rays);
    for (std::size_t c = 0; c < centers.size(); ++c) {
        for (std::size_t r = 0; r < cfg.rays_per_center; ++r) {
            Ray& ray = rays[c * cfg.rays_per_center + r];
            ray.center = c;
            ray.direction.resize(points.dim());
            double norm_sq = 0.0;
            do {
                norm_sq = 0.0;
                for (double& v : ray.direction) {
                    v = rng.normal();
                    norm_sq += v * v;
                }
            } while (norm_sq == 0.0);
            const double inv = 1.0 / std::sqrt(norm_sq);
            for (double& v : ray.direction) v *= inv;
        }
    }

    if (diagnostics) {
        diagnostics->centers = centers.matrix();
        diagnostics->directions.clear();
        diagnostics->ray_center.clear();
        for (const Ray& ray : rays) {
            diagnostics->directions.push_back(ray.direction);
            diagnostics->ray_center.push_back(ray.center);
        }
        diagnostics->point_ray.resize(points.size());
        diagnostics->point_projection.resize(points.size());
        diagnostics->point_residual_sq.resize(points.size());
    }

    // Snap every point to its globally closest ray.
    std::vector<std::vector<std::pair<double, double>>> per_ray(num_rays);
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto p = points.point(i);
        std::size_t best_ray = 0;
        double best_d = std::numeric_limits<double>::infinity();
        double best_s = 0.0;
        for (std::size_t r = 0; r < num_rays; ++r) {
            double s = 0.0;
            const double d = ray_distance_sq(p, centers.center(rays[r].center),
                                             rays[r].direction, &s);
            if (d < best_d) {
                best_d = d;
                best_ray = r;
                best_s = s;
            }
        }
        per_ray[best_ray].emplace_back(best_s, points.weight(i));
        if (diagnostics) {
            diagnostics->point_ray[i] = best_ray;
            diagnostics->point_projection[i] = best_s;
            diagnostics->point_residual_sq[i] = best_d;
        }
    }

    std::vector<std::vector<double>> out_points;
    std::vector<double> out_weights;
    for (std::size_t r = 0; r < num_rays; ++r) {
        auto& members = per_ray[r];
        if (members.empty()) continue;
        std::sort(members.begin(), members.end());

        // Complexity guard: very heavy rays are pre-quantized into weighted
        // quantile points before the quadratic dynamic program.
        if (members.size() > cfg.max_points_per_ray) {
            std::vector<std::pair<double, double>> packed;
            packed.reserve(cfg.max_points_per_ray);
            const std::size_t per_bucket =
                (members.size() + cfg.max_points_per_ray - 1) / cfg.max_points_per_ray;
            for (std::size_t lo = 0; lo < members.size(); lo += per_bucket) {
                const std::size_t hi = std::min(lo + per_bucket, members.size());
                double mass = 0.0, moment = 0.0;
                for (std::size_t i = lo; i < hi; ++i) {
                    mass += members[i].second;
                    moment += members[i].second * members[i].first;
                }
                packed.emplace_back(mass > 0.0 ? moment / mass : members[lo].first,
                                    mass);
            }
            members = std::move(packed);
        }

        std::vector<double> values(members.size()), weights(members.size());
        for (std::size_t i = 0; i < members.size(); ++i) {
            values[i] = members[i].first;
            weights[i] = members[i].second;
        }
        const Kmeans1DResult dp =
            optimal_1d_kmeans(values, weights, cfg.per_ray_centers);

        const auto c = centers.center(rays[r].center);
        for (std::size_t b = 0; b + 1 < dp.boundaries.size(); ++b) {
            double mass = 0.0;
            for (std::size_t i = dp.boundaries[b]; i < dp.boundaries[b + 1]; ++i)
                mass += weights[i];
            if (mass <= 0.0) continue;
            std::vector<double> q(points.dim());
            for (std::size_t j = 0; j < q.size(); ++j)
                q[j] = c[j] + dp.centers[b] * rays[r].direction[j];
            out_points.push_back(std::move(q));
            out_weights.push_back(mass);
        }
    }

    if (out_points.empty())
        throw std::logic_error("raymaker_coreset: no output points");
    Matrix pts(out_points.size(), points.dim());
    for (std::size_t i = 0; i < out_points.size(); ++i)
        std::copy(out_points[i].begin(), out_points[i].end(), pts.row(i).begin());
    return WeightedCoreset{std::move(pts), std::move(out_weights), std::nullopt};
}

}  // namespace coresets
