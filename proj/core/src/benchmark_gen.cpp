#include "coresets/benchmark_gen.hpp"

#include <cmath>
#include <stdexcept>

#include "coresets/geometry.hpp"
#include "coresets/hungarian.hpp"

namespace coresets {

namespace {

std::size_t checked_pow(std::size_t base, std::size_t exp, std::size_t limit) {
    std::size_t result = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (result > limit / base)
            throw std::overflow_error("benchmark size exceeds memory budget");
        result *= base;
    }
    return result;
}

}  // namespace

std::vector<double> base_vector(std::size_t i, std::size_t k) {
    if (i < 1 || i > k)
        throw std::invalid_argument("base_vector: i must be in [1, k]");
    std::vector<double> v(k, -1.0 / static_cast<double>(k));
    v[i - 1] = (static_cast<double>(k) - 1.0) / static_cast<double>(k);
    return v;
}

BenchmarkInstance generate_benchmark(std::size_t k, std::size_t alpha,
                                     std::size_t max_entries) {
    if (k < 2) throw std::invalid_argument("generate_benchmark: k must be >= 2");
    if (alpha < 2)
        throw std::invalid_argument("generate_benchmark: alpha must be >= 2");

    const std::size_t n = checked_pow(k, alpha, max_entries);
    const std::size_t d = alpha * k;
    if (n > max_entries / d)
        throw std::overflow_error("benchmark size exceeds memory budget");

    BenchmarkInstance inst;
    inst.k = k;
    inst.alpha = alpha;
    inst.matrix = Matrix(n, d);
    inst.planted.assign(alpha, std::vector<std::size_t>(n));

    const double hi = (static_cast<double>(k) - 1.0) / static_cast<double>(k);
    const double lo = -1.0 / static_cast<double>(k);

    // Column a*k + b repeats the block pattern of the b-th base vector with
    // period k^(a+1); point i is positive in block a's column of index
    // (i mod k^(a+1)) / k^a, which is also its planted label.
    std::size_t period = k;  // k^(a+1)
    std::size_t stride = 1;  // k^a
    for (std::size_t a = 0; a < alpha; ++a) {
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t label = (i % period) / stride;
            inst.planted[a][i] = label;
            for (std::size_t b = 0; b < k; ++b)
                inst.matrix(i, a * k + b) = (b == label) ? hi : lo;
        }
        stride = period;
        period *= k;
    }
    return inst;
}

CenterSet planted_centers(const BenchmarkInstance& instance, std::size_t a) {
    if (a >= instance.alpha)
        throw std::invalid_argument("planted_centers: clustering index out of range");
    const std::size_t n = instance.size();
    const std::size_t d = instance.dim();
    Matrix centers(instance.k, d, 0.0);
    std::vector<double> counts(instance.k, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = instance.planted[a][i];
        auto row = centers.row(j);
        const auto p = instance.matrix.row(i);
        for (std::size_t t = 0; t < d; ++t) row[t] += p[t];
        counts[j] += 1.0;
    }
    for (std::size_t j = 0; j < instance.k; ++j)
        for (double& v : centers.row(j)) v /= counts[j];
    return CenterSet(std::move(centers));
}

double planted_cluster_cost(std::size_t k, std::size_t alpha) {
    if (k < 2 || alpha < 2)
        throw std::invalid_argument("planted_cluster_cost: k, alpha must be >= 2");
    return static_cast<double>(alpha - 1) *
           std::pow(static_cast<double>(k), static_cast<double>(alpha) - 2.0) *
           static_cast<double>(k - 1);
}

double clustering_distance(std::span<const std::size_t> a,
                           std::span<const std::size_t> b, std::size_t k) {
    if (a.size() != b.size())
        throw std::invalid_argument("clustering_distance: unequal lengths");
    if (a.empty())
        throw std::invalid_argument("clustering_distance: empty assignments");
    Matrix confusion(k, k, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] >= k || b[i] >= k)
            throw std::invalid_argument("clustering_distance: label out of range");
        confusion(a[i], b[i]) += 1.0;
    }
    // Maximize the matched trace = minimize the negated overlap.
    Matrix negated(k, k);
    for (std::size_t i = 0; i < k * k; ++i) negated.data[i] = -confusion.data[i];
    const auto [perm, neg_total] = solve_assignment(negated);
    (void)perm;
    return 1.0 + neg_total / static_cast<double>(a.size());
}

PointSet composite_benchmark(const CompositeSpec& spec, std::size_t max_entries) {
    // A single block degenerates to the plain instance (no offset applied).
    if (spec.blocks.empty())
        throw std::invalid_argument("composite_benchmark: need at least 1 block");

    std::vector<BenchmarkInstance> blocks;
    std::size_t total_n = 0, total_d = 0;
    double max_diameter = 0.0;
    for (const auto& b : spec.blocks) {
        blocks.push_back(generate_benchmark(b.k, b.alpha, max_entries));
        total_n += blocks.back().size();
        total_d += blocks.back().dim();
        // Two points differing in every block coordinate are 2*alpha apart
        // in squared distance.
        max_diameter =
            std::max(max_diameter, std::sqrt(2.0 * static_cast<double>(b.alpha)));
    }
    if (total_d == 0 || total_n > max_entries / total_d)
        throw std::overflow_error("composite benchmark exceeds memory budget");

    const double offset =
        spec.offset_scale ? *spec.offset_scale : 10.0 * max_diameter;

    Matrix out(total_n, total_d, 0.0);
    std::size_t row0 = 0, col0 = 0;
    for (std::size_t t = 0; t < blocks.size(); ++t) {
        const auto& inst = blocks[t];
        for (std::size_t i = 0; i < inst.size(); ++i) {
            auto dst = out.row(row0 + i);
            const auto src = inst.matrix.row(i);
            for (std::size_t j = 0; j < inst.dim(); ++j) dst[col0 + j] = src[j];
            dst[col0] += offset * static_cast<double>(t);
        }
        row0 += inst.size();
        col0 += inst.dim();
    }
    return PointSet(std::move(out));
}

}  // namespace coresets
