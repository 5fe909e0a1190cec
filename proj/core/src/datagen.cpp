#include "coresets/datagen.hpp"

#include <stdexcept>

#include "coresets/rng.hpp"

namespace coresets {

PointSet gaussian_mixture(const MixtureConfig& cfg) {
    if (cfg.n == 0 || cfg.dim == 0 || cfg.components == 0)
        throw std::invalid_argument("gaussian_mixture: n, dim, components >= 1");
    Rng rng(mix_seed(cfg.seed, 0x9a55ULL));

    Matrix centers(cfg.components, cfg.dim);
    for (double& v : centers.data) v = rng.uniform(-cfg.center_box, cfg.center_box);

    const std::size_t total_dim = cfg.dim + cfg.noise_dims;
    Matrix points(cfg.n, total_dim);
    for (std::size_t i = 0; i < cfg.n; ++i) {
        const std::size_t c = rng.index(cfg.components);
        auto row = points.row(i);
        for (std::size_t j = 0; j < cfg.dim; ++j)
            row[j] = centers(c, j) + cfg.stddev * rng.normal();
        for (std::size_t j = cfg.dim; j < total_dim; ++j)
            row[j] = cfg.noise_stddev * rng.normal();
    }
    return PointSet(std::move(points));
}

}  // namespace coresets
