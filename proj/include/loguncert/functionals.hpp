#pragma once

#include "loguncert/grid.hpp"

namespace loguncert {

// Parameter bundle shared by the inequality families. Fields are only
// meaningful in the combinations the validators below enforce.
struct InequalityParams {
    int d = 3;
    double s = 0.0;       // smoothness order
    double p = 2.0;       // Lebesgue exponent (may be +infinity)
    double beta = 0.0;    // weight power in |x|^{-beta}
    double lambda = 1.0;  // kernel power
    double t = 0.0;       // position along the interpolation sweep, in [0,1]
    double theta = 0.0;   // interpolation parameter, in [0,1]
    double a = 1.0;       // scale in the log-Sobolev comparison
    double s1 = 0.0, p1 = 2.0, beta1 = 0.0;  // endpoint values
};

// beta = s + d/p - d/2, 2 <= p <= 2/(1-2s)_+ (1/0 := +inf), 0 <= s < d/2.
void validate_rubin_consistent(const InequalityParams& params);

// 1/p_theta = (1-theta)/2 + theta/p1 and beta_theta = theta * beta1,
// with (p, beta) playing the role of (p_theta, beta_theta).
void validate_theta_consistent(const InequalityParams& params);

// || |x|^{-beta} f ||_p = (sum_i w_i r_i^{-beta p} |f_i|^p)^{1/p}.
// p = +infinity is the grid maximum of r^{-beta} |f|.
double weighted_lp_norm(const RadialProfile& f, double p, double beta);

// || f ||_{H^s-dot} = (sum_j w_j rho_j^{2s} |fhat_j|^2)^{1/2}, s > -d/2.
double sobolev_norm(const RadialProfile& f, double s);

// sum_i w_i |f_i|^2 log |f_i|, with 0 log 0 = 0.
double entropy(const RadialProfile& f);

// sum_i w_i |f_i|^2 log r_i.
double log_moment_physical(const RadialProfile& f);

// sum_j w_j |fhat_j|^2 log rho_j; equals d/ds ||f||_{H^s-dot} at s = 0 for
// unit-norm f.
double log_moment_fourier(const RadialProfile& f);

// Double integral of f(x) f(y) |x-y|^{-lambda}, 0 < lambda < d, via the
// cached spherical-mean kernel matrix.
double hls_energy(const RadialProfile& f, double lambda);

// Double integral of f(x) f(y) (-log |x-y|); the lambda-derivative of the
// power energy at lambda = 0.
double log_hls_energy(const RadialProfile& f);

// || fhat ||_q on the frequency grid; q = +infinity is max |fhat|.
double lp_norm_spectral(const RadialProfile& f, double q);

// sum_i w_i f_i log f_i for nonnegative f, with 0 log 0 = 0 (entropy with
// respect to mass rather than L^2 density).
double mass_entropy(const RadialProfile& f);

}  // namespace loguncert
