#pragma once

#include <cstddef>
#include <vector>

namespace loguncert {

struct GaussRule {
    std::vector<double> nodes;    // in (-1, 1), ascending
    std::vector<double> weights;  // positive, sum to 2
};

// Gauss-Legendre rule of the given order, computed once and cached.
const GaussRule& gauss_legendre(std::size_t order);

}  // namespace loguncert
