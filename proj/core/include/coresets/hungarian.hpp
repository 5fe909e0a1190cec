#ifndef CORESETS_HUNGARIAN_HPP
#define CORESETS_HUNGARIAN_HPP

#include <utility>
#include <vector>

#include "coresets/point_set.hpp"

namespace coresets {

/// Minimum-cost perfect assignment on a square cost matrix, O(n^3)
/// potentials method. Returns (perm, cost) with row i matched to column
/// perm[i].
std::pair<std::vector<std::size_t>, double> solve_assignment(const Matrix& cost);

}  // namespace coresets

#endif  // CORESETS_HUNGARIAN_HPP
