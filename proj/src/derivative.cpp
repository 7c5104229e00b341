#include "loguncert/derivative.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>

#include "loguncert/constants.hpp"
#include "loguncert/errors.hpp"
#include "loguncert/functionals.hpp"

namespace loguncert {
namespace {

// Polynomial extrapolation of the quotient table to step 0 through the
// smallest `levels`+1 steps (Neville at x = 0). Deeper tableaus would only
// amplify quadrature noise, so callers cap levels at 2. Returns the value and
// the spread between the last two elimination stages as an error estimate.
std::pair<double, double> extrapolate_to_zero(const std::vector<double>& h,
                                              const std::vector<double>& q,
                                              int levels) {
    const std::size_t use = static_cast<std::size_t>(levels) + 1;
    std::vector<double> x(h.end() - static_cast<std::ptrdiff_t>(use), h.end());
    std::vector<double> t(q.end() - static_cast<std::ptrdiff_t>(use), q.end());
    // Ascending j reads t[j + 1] before the pass overwrites it, so after
    // level lev, t[j] holds the extrapolant through steps j..j+lev.
    double previous = t.back();  // deepest raw quotient, stage 0
    for (std::size_t lev = 1; lev < use; ++lev) {
        for (std::size_t j = 0; j + lev < use; ++j)
            t[j] = (x[j + lev] * t[j] - x[j] * t[j + 1]) / (x[j + lev] - x[j]);
        if (lev + 1 == use) return {t[0], std::abs(t[0] - previous) + 1e-12};
        previous = t[use - 1 - lev];  // smallest-step extrapolant this level
    }
    return {t[0], 1e-12};  // single-step table, no stages to compare
}

}  // namespace

std::vector<double> default_steps() {
    std::vector<double> steps;
    for (int k = 0; k <= 6; ++k) steps.push_back(0.1 * std::pow(2.0, -k));
    return steps;
}

DerivativeReport differentiate_at_zero(const ParametricFamily& family,
                                       const RadialProfile& f,
                                       const std::vector<double>& steps) {
    require(static_cast<bool>(family.lhs) &&
                static_cast<bool>(family.rhs_functional) &&
                static_cast<bool>(family.constant),
            "family maps (lhs, rhs_functional, constant) must all be set");
    require(!steps.empty(), "at least one step is required");
    for (std::size_t i = 0; i < steps.size(); ++i) {
        require(steps[i] > 0.0 && steps[i] <= family.t_max,
                "step outside the family domain (0, t_max]");
        if (i > 0)
            require(steps[i] < steps[i - 1], "steps must be strictly decreasing");
    }

    const double F0 = family.lhs(0.0, f);
    const double G0 = family.rhs_functional(0.0, f);
    const double k0 = family.constant(0.0);
    require(std::abs(F0 - k0 * G0) <= 1e-8 * std::abs(F0),
            "equality hypothesis F_0 = k_0 G_0 violated at t = 0");

    DerivativeReport report;
    report.steps = steps;
    report.empirical_constant = family.empirical_constant;
    for (double h : steps) {
        report.lhs_quotients.push_back((family.lhs(h, f) - F0) / h);
        report.rhs_quotients.push_back(
            (family.constant(h) * family.rhs_functional(h, f) - k0 * G0) / h);
    }

    // The product rule at t = 0 turns the quotient limit of k_t G_t into
    // G_0 k'(0) + k_0 G'(0), so extrapolating the product covers the whole
    // right-hand side of the differentiated inequality.
    const int levels = std::min<int>(2, static_cast<int>(steps.size()) - 1);
    const auto [lv, le] = extrapolate_to_zero(steps, report.lhs_quotients, levels);
    const auto [rv, re] = extrapolate_to_zero(steps, report.rhs_quotients, levels);
    report.lhs_derivative = lv;
    report.lhs_error = le;
    report.rhs_derivative = rv;
    report.rhs_error = re;
    report.extrapolation_order = levels;
    report.slack = rv - lv;
    return report;
}

ParametricFamily rubin_family(int d, double s1, double p1, ConstantMode mode,
                              double constant_value) {
    require(constant_value > 0.0, "interpolation constant must be positive");
    require(s1 > 0.0, "endpoint smoothness s1 must be positive");
    // Validates the (s1, p1) range and the endpoint relation in one place.
    const double beta1 = rubin_beta(d, p1, s1);

    ParametricFamily family;
    family.lhs = [s1, p1, beta1](double s, const RadialProfile& f) {
        const ThetaExponents exps = theta_exponents(p1, s / s1);
        return weighted_lp_norm(f, exps.p_theta, exps.beta_factor * beta1);
    };
    family.rhs_functional = [](double s, const RadialProfile& f) {
        return sobolev_norm(f, s);
    };
    family.constant = [constant_value, s1](double s) {
        return interpolated_constant_bound(constant_value, s, s1);
    };
    family.t_max = s1;
    family.equality_check =
        "at s = 0 the path exponents collapse to (p, beta) = (2, 0) and the "
        "constant to C^0 = 1, so both sides equal the L2 norm of f";
    family.empirical_constant = mode == ConstantMode::empirical;
    return family;
}

}  // namespace loguncert
