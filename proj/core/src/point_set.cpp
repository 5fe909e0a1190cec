#include "coresets/point_set.hpp"

#include <cmath>
#include <stdexcept>

namespace coresets {

namespace {

void check_finite(const Matrix& m, const char* what) {
    for (double v : m.data) {
        if (!std::isfinite(v))
            throw std::invalid_argument(std::string(what) +
                                        ": coordinates must be finite");
    }
}

}  // namespace

PointSet::PointSet(Matrix points)
    : PointSet(std::move(points), {}) {}

PointSet::PointSet(Matrix points, std::vector<double> weights)
    : points_(std::move(points)), weights_(std::move(weights)) {
    if (points_.rows == 0) throw std::invalid_argument("PointSet: n must be >= 1");
    if (points_.cols == 0) throw std::invalid_argument("PointSet: d must be >= 1");
    check_finite(points_, "PointSet");
    if (weights_.empty()) weights_.assign(points_.rows, 1.0);
    if (weights_.size() != points_.rows)
        throw std::invalid_argument("PointSet: weight count must equal n");
    for (double w : weights_) {
        if (!std::isfinite(w) || w < 0.0)
            throw std::invalid_argument("PointSet: weights must be finite and >= 0");
        total_weight_ += w;
    }
}

CenterSet::CenterSet(Matrix centers) : centers_(std::move(centers)) {
    if (centers_.rows == 0)
        throw std::invalid_argument("CenterSet: k must be >= 1");
    if (centers_.cols == 0)
        throw std::invalid_argument("CenterSet: d must be >= 1");
}

double WeightedCoreset::total_weight() const {
    double t = 0.0;
    for (double w : weights) t += w;
    return t;
}

PointSet WeightedCoreset::as_point_set() const {
    return PointSet(points, weights);
}

}  // namespace coresets
