#pragma once

#include <cstdint>
#include <string>

#include "loguncert/grid.hpp"

namespace loguncert {

// Smooth decaying radial trial shapes used to probe the inequalities.
enum class TrialKind {
    gaussian,         // e^{-a r^2}
    exponential,      // e^{-a r}
    poly_decay,       // (1 + (r/a)^2)^{-k/2}
    radial_hermite,   // Laguerre-type transform eigenfunction, mode k
    random_schwartz,  // seeded combination of the first m eigenmodes
};

struct TrialSpec {
    TrialKind kind = TrialKind::gaussian;
    double a = 0.5;          // scale, where the kind uses one
    int k = 0;               // mode index or decay power
    std::uint64_t seed = 0;  // random_schwartz only
    int m = 5;               // random_schwartz mode count
};

// Short parameter string for reports, e.g. "gaussian(a=0.5)".
std::string describe(const TrialSpec& spec);

// Samples the trial shape on the grid. Scales must be positive, the decay
// power of poly_decay must be at least dimension + 1 (keeps the shape
// integrable with an integrable squared tail), mode counts at least 1.
RadialProfile trial(const TrialSpec& spec, const GridPtr& grid);

// Transform eigenfunction: L_k^{(d/2-1)}(r^2) e^{-r^2/2} with eigenvalue
// (-1)^k under the radial transform of this codebase.
double radial_hermite_mode(int d, int k, double r);

}  // namespace loguncert
