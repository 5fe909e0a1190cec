#ifndef CORESETS_TESTS_TEST_UTIL_HPP
#define CORESETS_TESTS_TEST_UTIL_HPP

#include <initializer_list>
#include <vector>

#include "coresets/point_set.hpp"
#include "coresets/rng.hpp"

namespace test_util {

inline coresets::Matrix make_matrix(
    std::initializer_list<std::initializer_list<double>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = rows.begin()->size();
    coresets::Matrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (double v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

inline coresets::PointSet make_points(
    std::initializer_list<std::initializer_list<double>> rows) {
    return coresets::PointSet(make_matrix(rows));
}

inline coresets::CenterSet make_centers(
    std::initializer_list<std::initializer_list<double>> rows) {
    return coresets::CenterSet(make_matrix(rows));
}

inline coresets::PointSet random_points(coresets::Rng& rng, std::size_t n,
                                        std::size_t d, double box = 5.0) {
    coresets::Matrix m(n, d);
    for (double& v : m.data) v = rng.uniform(-box, box);
    return coresets::PointSet(std::move(m));
}

}  // namespace test_util

#endif  // CORESETS_TESTS_TEST_UTIL_HPP
