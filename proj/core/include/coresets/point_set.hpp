#ifndef CORESETS_POINT_SET_HPP
#define CORESETS_POINT_SET_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace coresets {

/// Dense row-major matrix of doubles.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, double fill = 0.0)
        : rows(r), cols(c), data(r * c, fill) {}

    double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    std::span<double> row(std::size_t i) { return {data.data() + i * cols, cols}; }
    std::span<const double> row(std::size_t i) const {
        return {data.data() + i * cols, cols};
    }
};

/// The input data: n points in d dimensions with nonnegative per-point
/// weights (all 1.0 unless stated otherwise).
///
/// Immutable after construction; construction validates n >= 1, d >= 1,
/// finite coordinates and nonnegative finite weights.
class PointSet {
public:
    /// Unit-weight point set.
    explicit PointSet(Matrix points);
    PointSet(Matrix points, std::vector<double> weights);

    std::size_t size() const { return points_.rows; }
    std::size_t dim() const { return points_.cols; }

    std::span<const double> point(std::size_t i) const { return points_.row(i); }
    double weight(std::size_t i) const { return weights_[i]; }
    const std::vector<double>& weights() const { return weights_; }
    const Matrix& matrix() const { return points_; }

    double total_weight() const { return total_weight_; }

private:
    Matrix points_;
    std::vector<double> weights_;
    double total_weight_ = 0.0;
};

/// An ordered list of k candidate centers.
class CenterSet {
public:
    explicit CenterSet(Matrix centers);

    std::size_t size() const { return centers_.rows; }
    std::size_t dim() const { return centers_.cols; }
    std::span<const double> center(std::size_t i) const { return centers_.row(i); }
    const Matrix& matrix() const { return centers_; }

private:
    Matrix centers_;
};

/// Output of every coreset construction: m weighted points, optionally
/// tagged with the index of the input point each one originates from.
/// Synthetic points (BICO feature centroids, ray points) carry no sources.
struct WeightedCoreset {
    Matrix points;
    std::vector<double> weights;
    std::optional<std::vector<std::size_t>> source_indices;

    std::size_t size() const { return points.rows; }
    std::size_t dim() const { return points.cols; }
    double total_weight() const;

    /// View the coreset as a weighted point set (copies the storage).
    PointSet as_point_set() const;
};

/// Nearest-center labeling of a point set, with the squared distance each
/// point pays to its assigned center.
struct Assignment {
    std::vector<std::size_t> labels;
    std::vector<double> sq_dists;

    std::size_t size() const { return labels.size(); }
};

}  // namespace coresets

#endif  // CORESETS_POINT_SET_HPP
