#pragma once

#include <functional>
#include <string>
#include <vector>

#include "loguncert/grid.hpp"

namespace loguncert {

// One-parameter inequality family F_t <= k_t G_t on [0, t_max] that collapses
// to an equality F_0 = k_0 G_0 at t = 0. Differencing both sides at t = 0
// turns the family into a limiting inequality between t-derivatives.
struct ParametricFamily {
    std::function<double(double, const RadialProfile&)> lhs;             // F_t
    std::function<double(double, const RadialProfile&)> rhs_functional;  // G_t
    std::function<double(double)> constant;                              // k_t
    double t_max = 0.0;
    // Human-readable reason the t = 0 equality holds identically.
    std::string equality_check;
    // Set when k_t was built from an estimated constant; the differentiated
    // right-hand side is then a bound via that estimate, not a proven value.
    bool empirical_constant = false;
};

// Both sides of the differentiated inequality
//   d/dt F_t|_0 <= G_0 d/dt k_t|_0 + k_0 d/dt G_t|_0,
// with the raw one-sided quotients that produced them.
struct DerivativeReport {
    double lhs_derivative = 0.0;
    double rhs_derivative = 0.0;
    double lhs_error = 0.0;  // spread of the last extrapolation stage
    double rhs_error = 0.0;
    std::vector<double> steps;
    std::vector<double> lhs_quotients;  // (F_h - F_0)/h per step
    std::vector<double> rhs_quotients;  // (k_h G_h - k_0 G_0)/h per step
    int extrapolation_order = 0;        // polynomial degree removed at h = 0
    double slack = 0.0;                 // rhs_derivative - lhs_derivative
    bool empirical_constant = false;
};

// Steps 0.1 * 2^{-k}, k = 0..6. One-sided (the limit is t -> 0+) and stopping
// above 1e-3, below which quadrature noise dominates the quotients at default
// resolution.
std::vector<double> default_steps();

// Differentiates the family at t = 0 on the trial profile f. Steps must be
// strictly decreasing and lie in (0, t_max]. Requires the equality hypothesis
// |F_0 - k_0 G_0| <= 1e-8 |F_0|; forms one-sided quotients of F and of k*G at
// each step and extrapolates both to h = 0 (Neville through the smallest
// steps). A negative slack is reported, not thrown: it is the evidence that
// the family's constant is understated.
DerivativeReport differentiate_at_zero(const ParametricFamily& family,
                                       const RadialProfile& f,
                                       const std::vector<double>& steps);

// How the constant of an interpolation family is sourced.
enum class ConstantMode { bound, empirical };

// The weighted-norm versus smoothness-norm family along the interpolation
// path between (p, beta) = (2, 0) at s = 0 and (p1, beta1) at s = s1:
//   F_s = || |x|^{-beta(s)} f ||_{p(s)},  G_s = ||f||_{H^s},  k_s = C^{s/s1},
// with 1/p(s) and beta(s) affine in s and C = constant_value, either a proven
// bound or an empirical estimate per mode. At s = 0 both sides are the plain
// L2 norm and k_0 = 1, so the equality hypothesis holds for every f. The
// constant contributes (1/s1) log C to the differentiated right-hand side.
ParametricFamily rubin_family(int d, double s1, double p1, ConstantMode mode,
                              double constant_value);

}  // namespace loguncert
