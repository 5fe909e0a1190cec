#ifndef CORESETS_DIMRED_HPP
#define CORESETS_DIMRED_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "coresets/point_set.hpp"
#include "coresets/rng.hpp"

namespace coresets {

enum class ProjectionKind { pca, random };

struct ProjectionModel {
    ProjectionKind kind = ProjectionKind::pca;
    std::size_t input_dim = 0;
    std::size_t output_dim = 0;
    /// d x r. PCA: orthonormal columns (top right singular vectors of the
    /// centered data). Random: i.i.d. N(0, 1/r) entries.
    Matrix basis;
    /// PCA centers the data before projecting; zero for random models.
    std::vector<double> mean;
    /// PCA only: variance captured along each basis column, descending.
    std::vector<double> variances;
};

/// Top-r principal components of the mean-centered data via randomized
/// subspace power iteration (oversampling 8). r beyond the data's rank is
/// padded with orthonormal completions carrying ~0 variance.
ProjectionModel fit_pca(const PointSet& points, std::size_t r,
                        std::size_t power_iters, Rng& rng);
ProjectionModel fit_pca(const PointSet& points, std::size_t r,
                        std::size_t power_iters = 4, std::uint64_t seed = 0);

/// Gaussian random projection to r dimensions (entries N(0, 1/r)), an
/// unbiased estimator of squared norms.
ProjectionModel fit_random_projection(std::size_t input_dim, std::size_t r,
                                      Rng& rng);
ProjectionModel fit_random_projection(std::size_t input_dim, std::size_t r,
                                      std::uint64_t seed);

/// Apply the model; weights carry through unchanged.
PointSet project(const PointSet& points, const ProjectionModel& model);

void save_projection_model(const std::string& path, const ProjectionModel& model);
ProjectionModel load_projection_model(const std::string& path);

/// Total weighted variance about the weighted mean (sum over coordinates).
double total_variance(const PointSet& points);

}  // namespace coresets

#endif  // CORESETS_DIMRED_HPP
