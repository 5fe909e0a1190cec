#include "coresets/dimred.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "coresets/geometry.hpp"

namespace coresets {

namespace {

// Column-wise modified Gram-Schmidt; degenerate columns are replaced with
// fresh random directions so the result is always orthonormal.
void orthonormalize_columns(Matrix& m, Rng& rng) {
    const std::size_t d = m.rows, c = m.cols;
    for (std::size_t j = 0; j < c; ++j) {
        for (int attempt = 0; attempt < 64; ++attempt) {
            for (std::size_t i = 0; i < j; ++i) {
                double dot = 0.0;
                for (std::size_t t = 0; t < d; ++t) dot += m(t, i) * m(t, j);
                for (std::size_t t = 0; t < d; ++t) m(t, j) -= dot * m(t, i);
            }
            double norm_sq = 0.0;
            for (std::size_t t = 0; t < d; ++t) norm_sq += m(t, j) * m(t, j);
            if (norm_sq > 1e-24) {
                const double inv = 1.0 / std::sqrt(norm_sq);
                for (std::size_t t = 0; t < d; ++t) m(t, j) *= inv;
                break;
            }
            for (std::size_t t = 0; t < d; ++t) m(t, j) = rng.normal();
        }
    }
}

// Cyclic Jacobi eigendecomposition of a symmetric matrix. Returns
// eigenvalues; eigenvectors land in the columns of `vectors`.
std::vector<double> jacobi_eigen(Matrix a, Matrix& vectors) {
    const std::size_t n = a.rows;
    vectors = Matrix(n, n, 0.0);
    for (std::size_t i = 0; i < n; ++i) vectors(i, i) = 1.0;

    for (int sweep = 0; sweep < 128; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off += a(i, j) * a(i, j);
        if (off < 1e-28) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(a(p, q)) < 1e-300) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double cos = 1.0 / std::sqrt(t * t + 1.0);
                const double sin = t * cos;
                for (std::size_t i = 0; i < n; ++i) {
                    const double aip = a(i, p), aiq = a(i, q);
                    a(i, p) = cos * aip - sin * aiq;
                    a(i, q) = sin * aip + cos * aiq;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const double api = a(p, i), aqi = a(q, i);
                    a(p, i) = cos * api - sin * aqi;
                    a(q, i) = sin * api + cos * aqi;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const double vip = vectors(i, p), viq = vectors(i, q);
                    vectors(i, p) = cos * vip - sin * viq;
                    vectors(i, q) = sin * vip + cos * viq;
                }
            }
        }
    }
    std::vector<double> eigenvalues(n);
    for (std::size_t i = 0; i < n; ++i) eigenvalues[i] = a(i, i);
    return eigenvalues;
}

}  // namespace

double total_variance(const PointSet& points) {
    const auto mean = centroid(points);
    double total = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i)
        total += points.weight(i) * squared_distance(points.point(i), mean);
    return total;
}

ProjectionModel fit_pca(const PointSet& points, std::size_t r,
                        std::size_t power_iters, Rng& rng) {
    const std::size_t d = points.dim();
    const std::size_t n = points.size();
    if (r < 1 || r > d)
        throw std::invalid_argument("fit_pca: r must be in [1, d]");

    const auto mean = centroid(points);
    const std::size_t l = std::min(r + 8, d);  // oversampled subspace

    Matrix q(d, l);
    for (double& v : q.data) v = rng.normal();
    orthonormalize_columns(q, rng);

    // Subspace iteration on the weighted covariance, applied as two passes
    // over the centered data per round.
    Matrix y(n, l);
    auto apply_covariance = [&](const Matrix& in, Matrix& out) {
        for (std::size_t i = 0; i < n; ++i) {
            const auto p = points.point(i);
            for (std::size_t j = 0; j < l; ++j) {
                double acc = 0.0;
                for (std::size_t t = 0; t < d; ++t)
                    acc += (p[t] - mean[t]) * in(t, j);
                y(i, j) = acc;
            }
        }
        out = Matrix(d, l, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            const auto p = points.point(i);
            const double w = points.weight(i);
            for (std::size_t t = 0; t < d; ++t) {
                const double x = w * (p[t] - mean[t]);
                for (std::size_t j = 0; j < l; ++j) out(t, j) += x * y(i, j);
            }
        }
    };

    for (std::size_t it = 0; it < power_iters; ++it) {
        Matrix z;
        apply_covariance(q, z);
        q = std::move(z);
        orthonormalize_columns(q, rng);
    }

    // Rayleigh-Ritz: B = Q^T C Q, eigendecomposed exactly (l is small).
    Matrix cq;
    apply_covariance(q, cq);
    Matrix b(l, l, 0.0);
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j) {
            double acc = 0.0;
            for (std::size_t t = 0; t < d; ++t) acc += q(t, i) * cq(t, j);
            b(i, j) = acc;
        }
    // Symmetrize against rounding.
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = i + 1; j < l; ++j) {
            const double s = 0.5 * (b(i, j) + b(j, i));
            b(i, j) = s;
            b(j, i) = s;
        }

    Matrix eigvecs;
    const std::vector<double> eigvals = jacobi_eigen(std::move(b), eigvecs);
    std::vector<std::size_t> order(l);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t c) { return eigvals[a] > eigvals[c]; });

    ProjectionModel model;
    model.kind = ProjectionKind::pca;
    model.input_dim = d;
    model.output_dim = r;
    model.mean = mean;
    model.basis = Matrix(d, r);
    model.variances.resize(r);
    for (std::size_t j = 0; j < r; ++j) {
        const std::size_t src = order[j];
        model.variances[j] = std::max(0.0, eigvals[src]);
        for (std::size_t t = 0; t < d; ++t) {
            double acc = 0.0;
            for (std::size_t i = 0; i < l; ++i) acc += q(t, i) * eigvecs(i, src);
            model.basis(t, j) = acc;
        }
    }
    return model;
}

ProjectionModel fit_pca(const PointSet& points, std::size_t r,
                        std::size_t power_iters, std::uint64_t seed) {
    Rng rng(mix_seed(seed, 0xdca1ULL));
    return fit_pca(points, r, power_iters, rng);
}

ProjectionModel fit_random_projection(std::size_t input_dim, std::size_t r,
                                      Rng& rng) {
    if (input_dim == 0 || r == 0)
        throw std::invalid_argument("fit_random_projection: dims must be >= 1");
    ProjectionModel model;
    model.kind = ProjectionKind::random;
    model.input_dim = input_dim;
    model.output_dim = r;
    model.mean.assign(input_dim, 0.0);
    model.basis = Matrix(input_dim, r);
    const double scale = 1.0 / std::sqrt(static_cast<double>(r));
    for (double& v : model.basis.data) v = scale * rng.normal();
    return model;
}

ProjectionModel fit_random_projection(std::size_t input_dim, std::size_t r,
                                      std::uint64_t seed) {
    Rng rng(mix_seed(seed, 0x7a9dULL));
    return fit_random_projection(input_dim, r, rng);
}

PointSet project(const PointSet& points, const ProjectionModel& model) {
    if (points.dim() != model.input_dim)
        throw std::invalid_argument("project: dimension mismatch");
    const std::size_t n = points.size();
    const std::size_t r = model.output_dim;
    Matrix out(n, r);
    for (std::size_t i = 0; i < n; ++i) {
        const auto p = points.point(i);
        for (std::size_t j = 0; j < r; ++j) {
            double acc = 0.0;
            for (std::size_t t = 0; t < model.input_dim; ++t)
                acc += (p[t] - model.mean[t]) * model.basis(t, j);
            out(i, j) = acc;
        }
    }
    return PointSet(std::move(out), points.weights());
}

void save_projection_model(const std::string& path, const ProjectionModel& model) {
    nlohmann::json j;
    j["kind"] = model.kind == ProjectionKind::pca ? "pca" : "random";
    j["input_dim"] = model.input_dim;
    j["output_dim"] = model.output_dim;
    j["mean"] = model.mean;
    j["variances"] = model.variances;
    j["basis"] = model.basis.data;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_projection_model: cannot open " + path);
    out << j.dump(2) << "\n";
}

ProjectionModel load_projection_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_projection_model: cannot open " + path);
    nlohmann::json j;
    in >> j;
    ProjectionModel model;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "pca")
        model.kind = ProjectionKind::pca;
    else if (kind == "random")
        model.kind = ProjectionKind::random;
    else
        throw std::runtime_error("load_projection_model: unknown kind " + kind);
    model.input_dim = j.at("input_dim").get<std::size_t>();
    model.output_dim = j.at("output_dim").get<std::size_t>();
    model.mean = j.at("mean").get<std::vector<double>>();
    model.variances = j.at("variances").get<std::vector<double>>();
    model.basis = Matrix(model.input_dim, model.output_dim);
    model.basis.data = j.at("basis").get<std::vector<double>>();
    if (model.basis.data.size() != model.input_dim * model.output_dim)
        throw std::runtime_error("load_projection_model: basis size mismatch");
    return model;
}

}  // namespace coresets
