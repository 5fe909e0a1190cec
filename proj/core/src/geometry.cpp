#include "coresets/geometry.hpp"

#include <limits>
#include <stdexcept>

namespace coresets {

double squared_distance(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size())
        throw std::invalid_argument("squared_distance: dimension mismatch");
    double acc = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double diff = p[i] - q[i];
        acc += diff * diff;
    }
    return acc;
}

namespace {

double min_sq_dist(std::span<const double> p, const Matrix& centers,
                   std::size_t* best_index) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_i = 0;
    for (std::size_t c = 0; c < centers.rows; ++c) {
        const double d = squared_distance(p, centers.row(c));
        if (d < best) {
            best = d;
            best_i = c;
        }
    }
    if (best_index) *best_index = best_i;
    return best;
}

double cost_impl(const Matrix& pts, std::span<const double> weights,
                 const CenterSet& centers) {
    if (pts.cols != centers.dim())
        throw std::invalid_argument("clustering_cost: dimension mismatch");
    double total = 0.0;
    for (std::size_t i = 0; i < pts.rows; ++i)
        total += weights[i] * min_sq_dist(pts.row(i), centers.matrix(), nullptr);
    return total;
}

}  // namespace

double clustering_cost(const PointSet& points, const CenterSet& centers) {
    return cost_impl(points.matrix(), points.weights(), centers);
}

double clustering_cost(const WeightedCoreset& coreset, const CenterSet& centers) {
    return cost_impl(coreset.points, coreset.weights, centers);
}

std::vector<double> centroid(const PointSet& points,
                             std::span<const std::size_t> subset) {
    if (subset.empty())
        throw std::invalid_argument("centroid: empty subset");
    std::vector<double> mean(points.dim(), 0.0);
    double mass = 0.0;
    for (std::size_t idx : subset) {
        const double w = points.weight(idx);
        const auto p = points.point(idx);
        for (std::size_t j = 0; j < mean.size(); ++j) mean[j] += w * p[j];
        mass += w;
    }
    if (!(mass > 0.0))
        throw std::invalid_argument("centroid: subset has zero total weight");
    for (double& v : mean) v /= mass;
    return mean;
}

std::vector<double> centroid(const PointSet& points) {
    std::vector<std::size_t> all(points.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return centroid(points, all);
}

Assignment assign(const PointSet& points, const CenterSet& centers) {
    if (points.dim() != centers.dim())
        throw std::invalid_argument("assign: dimension mismatch");
    Assignment out;
    out.labels.resize(points.size());
    out.sq_dists.resize(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        std::size_t label = 0;
        out.sq_dists[i] = min_sq_dist(points.point(i), centers.matrix(), &label);
        out.labels[i] = label;
    }
    return out;
}

double assignment_cost(const PointSet& points, const Assignment& assignment) {
    double total = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i)
        total += points.weight(i) * assignment.sq_dists[i];
    return total;
}

}  // namespace coresets
