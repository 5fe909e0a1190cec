#include "coresets/hungarian.hpp"

#include <limits>
#include <stdexcept>

namespace coresets {

std::pair<std::vector<std::size_t>, double> solve_assignment(const Matrix& cost) {
    if (cost.rows != cost.cols)
        throw std::invalid_argument("solve_assignment: matrix must be square");
    const std::size_t n = cost.rows;
    const double inf = std::numeric_limits<double>::infinity();

    // Potentials formulation; rows and columns are 1-indexed, index 0 is
    // the virtual source.
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<std::size_t> match(n + 1, 0);  // column -> row
    std::vector<std::size_t> way(n + 1, 0);

    for (std::size_t i = 1; i <= n; ++i) {
        match[0] = i;
        std::size_t j0 = 0;
        std::vector<double> minv(n + 1, inf);
        std::vector<bool> used(n + 1, false);
        do {
            used[j0] = true;
            const std::size_t i0 = match[j0];
            double delta = inf;
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[match[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (match[j0] != 0);
        do {
            const std::size_t j1 = way[j0];
            match[j0] = match[j1];
            j0 = j1;
        } while (j0 != 0);
    }

    std::vector<std::size_t> perm(n);
    double total = 0.0;
    for (std::size_t j = 1; j <= n; ++j) {
        perm[match[j] - 1] = j - 1;
        total += cost(match[j] - 1, j - 1);
    }
    return {std::move(perm), total};
}

}  // namespace coresets
