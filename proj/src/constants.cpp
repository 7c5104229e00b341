#include "loguncert/constants.hpp"

#include <cmath>

#include "loguncert/errors.hpp"
#include "loguncert/special.hpp"

namespace loguncert {

namespace detail {

double hls_constant_continued(int d, double lambda) {
    const double dd = static_cast<double>(d);
    // the two Gamma-ratio terms cancel exactly at lambda = 0, so k_0 = 1
    // without rounding residue
    const double log_ratio = log_gamma(0.5 * dd) - log_gamma(dd);
    const double log_k = 0.5 * lambda * std::log(M_PI) +
                         log_gamma(0.5 * (dd - lambda)) -
                         log_gamma(dd - 0.5 * lambda) +
                         (-1.0 + lambda / dd) * log_ratio;
    return std::exp(log_k);
}

}  // namespace detail

double hls_constant(int d, double lambda) {
    require(d >= 1, "dimension must be at least 1");
    require(lambda >= 0.0 && lambda < d, "kernel power must lie in [0, d)");
    return detail::hls_constant_continued(d, lambda);
}

double log_hls_constant(int d) {
    require(d >= 1, "dimension must be at least 1");
    const double dd = static_cast<double>(d);
    return 0.5 * (std::log(M_PI) - digamma(0.5 * dd) + digamma(dd)) +
           (log_gamma(0.5 * dd) - log_gamma(dd)) / dd;
}

double rubin_beta(int d, double p, double s) {
    require(d >= 1, "dimension must be at least 1");
    require(s >= 0.0, "smoothness order must be nonnegative");
    require(s < 0.5 * d, "smoothness order must stay below d/2");
    require(p >= 2.0, "integrability exponent must be at least 2");
    if (s < 0.5)
        require(p <= 2.0 / (1.0 - 2.0 * s) + 1e-12,
                "integrability exponent must not exceed 2/(1-2s)");
    return s + static_cast<double>(d) / p - 0.5 * d;
}

ThetaExponents theta_exponents(double p1, double theta) {
    require(theta >= 0.0 && theta <= 1.0, "interpolation parameter must lie in [0, 1]");
    require(p1 >= 2.0, "endpoint exponent must be at least 2");
    return {1.0 / ((1.0 - theta) / 2.0 + theta / p1), theta};
}

double interpolated_constant_bound(double C1, double s, double s1) {
    require(C1 > 0.0, "endpoint constant must be positive");
    require(s >= 0.0 && s <= s1, "order must lie in [0, s1]");
    if (s == 0.0) return 1.0;
    return std::pow(C1, s / s1);
}

PathSlopes derivative_coefficients(int d, double s1, double p1) {
    require(s1 > 0.0, "path endpoint order must be positive");
    const double beta1 = rubin_beta(d, p1, s1);
    const double form_a = (4.0 / s1) * (0.5 - 1.0 / p1);
    const double form_b = (4.0 / d) * (1.0 - beta1 / s1);
    if (!(std::abs(form_a - form_b) <= 1e-12 * std::max(1.0, std::abs(form_a))))
        throw numerical_failure("interpolation slope forms disagree");
    return {form_a, beta1 / s1};
}

double beckner_bound(int d) {
    require(d >= 1, "dimension must be at least 1");
    return 0.5 * d * (std::log(2.0) - 1.0);
}

double log_sobolev_rhs(int d, double a, double grad_sq) {
    require(d >= 1, "dimension must be at least 1");
    require(a > 0.0, "dilation parameter must be positive");
    require(grad_sq >= 0.0, "gradient energy must be nonnegative");
    return a * a / M_PI * grad_sq - d * (1.0 + std::log(a));
}

}  // namespace loguncert
