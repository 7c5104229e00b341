#pragma once

#include "loguncert/functionals.hpp"

namespace loguncert {

// Where a constant's number came from.  Closed-form and finite-difference
// evaluations of the same constant must agree within 1e-6.
enum class Provenance { closed_form, finite_difference, empirical };

struct ConstantValue {
    double value = 0.0;
    Provenance provenance = Provenance::closed_form;
    InequalityParams inputs;  // parameter snapshot the value refers to
};

// Sharp constant of the power-kernel energy bound
//   E_lambda(f) <= k_lambda ||f||^2_{2d/(2d-lambda)},
//   k_lambda = pi^{lambda/2} Gamma((d-lambda)/2) / Gamma(d - lambda/2)
//              * (Gamma(d/2)/Gamma(d))^{-1 + lambda/d},
// evaluated in log space so large d cannot overflow.  Requires d >= 1 and
// 0 <= lambda < d; the lambda = 0 value is exactly 1.
double hls_constant(int d, double lambda);

namespace detail {
// Same formula without the range gate.  The log-kernel constant below is the
// slope of lambda -> k_lambda at 0, so its finite-difference oracle needs
// values at small negative lambda, where the formula is still analytic.
double hls_constant_continued(int d, double lambda);
}  // namespace detail

// Slope of hls_constant in lambda at lambda = 0:
//   (1/2)(log pi - psi(d/2) + psi(d)) + (1/d) log(Gamma(d/2)/Gamma(d)).
// This is the additive constant of the logarithmic-kernel energy bound.
double log_hls_constant(int d);

// Weight exponent beta = s + d/p - d/2 of the radial weighted-norm bound.
// Requires 0 <= s < d/2 and 2 <= p <= 2/(1-2s); the upper cap disappears
// once s >= 1/2.  Affine in 1/p with slope d.
double rubin_beta(int d, double p, double s);

// Interpolation exponents between the plain L2 norm (theta = 0) and the
// (p1, beta1) endpoint (theta = 1): 1/p_theta = (1-theta)/2 + theta/p1, and
// the weight exponent scales by beta_factor = theta.  Requires theta in
// [0, 1] and p1 >= 2.
struct ThetaExponents {
    double p_theta;
    double beta_factor;
};
ThetaExponents theta_exponents(double p1, double theta);

// Constant bound C1^{s/s1} along the interpolation path.  Requires C1 > 0
// and 0 <= s <= s1; s = 0 returns exactly 1.
double interpolated_constant_bound(double C1, double s, double s1);

// Slopes of the interpolation path (p(s), beta(s)) at s = 0:
//   dp/ds = (4/s1)(1/2 - 1/p1) = (4/d)(1 - beta1/s1),  dbeta/ds = beta1/s1,
// with beta1 = rubin_beta(d, p1, s1).  Both dp/ds forms are evaluated and
// must agree to 1e-12.  Requires a rubin-consistent (s1, p1) with s1 > 0.
struct PathSlopes {
    double dp_ds;
    double dbeta_ds;
};
PathSlopes derivative_coefficients(int d, double s1, double p1);

// (d/2)(log 2 - 1): the bound on the two-sided quadratic entropy sum for
// unit-norm profiles.  Negative in every dimension.
double beckner_bound(int d);

// (a^2/pi) grad_sq - d(1 + log a): the dilation family of right sides of
// the logarithmic Sobolev bound.  Requires a > 0; the minimum over a sits
// at a = sqrt(pi d / (2 grad_sq)).
double log_sobolev_rhs(int d, double a, double grad_sq);

}  // namespace loguncert
