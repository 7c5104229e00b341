#include "loguncert/special.hpp"

#include <cmath>

#include "loguncert/errors.hpp"

namespace loguncert {

double log_gamma(double x) {
    require(x > 0.0, "log_gamma: argument must be positive");
    return std::lgamma(x);
}

// Shift x above 8, then the asymptotic series
//   psi(x) ~ log x - 1/(2x) - sum B_{2k} / (2k x^{2k}).
// At x >= 8 the truncated series is accurate to ~1e-15.
double digamma(double x) {
    require(x > 0.0, "digamma: argument must be positive");
    double acc = 0.0;
    while (x < 8.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    // B_2/2, B_4/4, ... B_14/14
    static const double coef[] = {
        1.0 / 12.0,   -1.0 / 120.0,  1.0 / 252.0,  -1.0 / 240.0,
        1.0 / 132.0,  -691.0 / 32760.0, 1.0 / 12.0,
    };
    double series = 0.0;
    double pow = inv2;
    for (double c : coef) {
        series += c * pow;
        pow *= inv2;
    }
    return acc + std::log(x) - 0.5 * inv - series;
}

}  // namespace loguncert
