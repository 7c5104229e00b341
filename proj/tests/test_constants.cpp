#include <cmath>
#include <vector>

#include "doctest.h"
#include "loguncert/constants.hpp"
#include "loguncert/errors.hpp"
#include "loguncert/functionals.hpp"
#include "loguncert/grid.hpp"

using namespace loguncert;

TEST_CASE("power-bound constant: collapse at zero, frozen spots, Gamma oracle") {
    for (int d = 1; d <= 8; ++d)
        CHECK(hls_constant(d, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
    // references: 30-digit evaluation of the closed form
    CHECK(hls_constant(3, 2.0) == doctest::Approx(7.3038721193751091648).epsilon(1e-12));
    CHECK(hls_constant(3, 1.0) == doctest::Approx(2.2940107035415990009).epsilon(1e-12));
    CHECK(hls_constant(2, 0.5) == doctest::Approx(1.7751138184005196171).epsilon(1e-12));
    CHECK(hls_constant(1, 0.5) == doctest::Approx(2.9586751191886388923).epsilon(1e-12));
    // independent assembly through the standard library Gamma
    const double oracle = M_PI * std::tgamma(0.5) / std::tgamma(2.0) *
                          std::pow(std::tgamma(1.5) / std::tgamma(3.0), -1.0 / 3.0);
    CHECK(hls_constant(3, 2.0) == doctest::Approx(oracle).epsilon(1e-12));
    CHECK_THROWS_AS(hls_constant(3, 3.0), invalid_argument);
    CHECK_THROWS_AS(hls_constant(3, -0.1), invalid_argument);
    CHECK_THROWS_AS(hls_constant(0, 0.5), invalid_argument);
}

TEST_CASE("log-kernel constant equals the slope of the power constant") {
    const double frozen[] = {1.8378770664093454836,  1.0723649429247000871,
                             0.74420231741958188590, 0.54109174228435300354,
                             0.39517126484297343782, 0.28164084922101663960,
                             0.18885341734230823884, 0.11045161120693493656};
    // centered differences need small negative lambda, where the formula
    // continues analytically
    auto fd_slope = [](int d, double h) {
        return (detail::hls_constant_continued(d, h) -
                detail::hls_constant_continued(d, -h)) /
               (2.0 * h);
    };
    // the pinned step: third-derivative truncation is ~2e-9 at d = 3
    CHECK(std::abs(log_hls_constant(3) - fd_slope(3, 1e-4)) <= 1e-8);
    for (int d = 1; d <= 8; ++d) {
        const double closed = log_hls_constant(d);
        CHECK(closed == doctest::Approx(frozen[d - 1]).epsilon(1e-13));
        // h = 1e-5 keeps the larger-d curvature below the gate
        const double fd = fd_slope(d, 1e-5);
        CHECK(std::abs(closed - fd) <= 1e-8);
        const ConstantValue closed_form{closed, Provenance::closed_form, {}};
        const ConstantValue differenced{fd, Provenance::finite_difference, {}};
        CHECK(std::abs(closed_form.value - differenced.value) <= 1e-6);
    }
    // d = 1 reduces to log(2 pi)
    CHECK(log_hls_constant(1) == doctest::Approx(std::log(2.0 * M_PI)).epsilon(1e-14));
}

TEST_CASE("near-equality of the power bound at the known extremizer") {
    // (1 + r^2)^{-(2d-lambda)/2} saturates the bound; the slow tails need the
    // log-spaced grid to reach the 1e-3 window
    auto grid = make_grid(3, 1e4, 1024, GridScheme::log_uniform);
    auto f = sample(grid, [](double r) { return std::pow(1.0 + r * r, -2.5); });
    const double energy = hls_energy(f, 1.0);
    const double norm = weighted_lp_norm(f, 1.2, 0.0);
    CHECK(std::pow(norm, 1.2) == doctest::Approx(M_PI * M_PI / 4.0).epsilon(1e-4));
    CHECK(energy / (hls_constant(3, 1.0) * norm * norm) ==
          doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("weight exponent algebra") {
    CHECK(rubin_beta(3, 2.0, 0.3) == doctest::Approx(0.3).epsilon(1e-14));
    // Sobolev endpoint p = 2d/(d-2s) has no weight
    CHECK(rubin_beta(3, 6.0 / 2.4, 0.3) == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
    // upper endpoint p = 2/(1-2s) flips the weight to s(1-d)
    CHECK(rubin_beta(3, 2.0 / 0.4, 0.3) == doctest::Approx(0.3 * (1.0 - 3.0)).epsilon(1e-14));
    // affine in 1/p with slope d
    const double slope = (rubin_beta(4, 2.5, 0.4) - rubin_beta(4, 3.5, 0.4)) /
                         (1.0 / 2.5 - 1.0 / 3.5);
    CHECK(slope == doctest::Approx(4.0).epsilon(1e-13));
    CHECK_THROWS_AS(rubin_beta(3, 2.0, -0.1), invalid_argument);
    CHECK_THROWS_AS(rubin_beta(3, 2.0, 1.5), invalid_argument);
    CHECK_THROWS_AS(rubin_beta(3, 1.5, 0.3), invalid_argument);
    CHECK_THROWS_WITH_AS(rubin_beta(3, 6.0, 0.3), doctest::Contains("2/(1-2s)"),
                         invalid_argument);
    // no cap once s >= 1/2
    CHECK(std::isfinite(rubin_beta(3, 40.0, 0.7)));
}

TEST_CASE("interpolation exponents and the constant bound") {
    auto ends = theta_exponents(6.0, 0.0);
    CHECK(ends.p_theta == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(ends.beta_factor == 0.0);
    ends = theta_exponents(6.0, 1.0);
    CHECK(ends.p_theta == doctest::Approx(6.0).epsilon(1e-15));
    CHECK(ends.beta_factor == 1.0);
    CHECK(theta_exponents(6.0, 0.5).p_theta == doctest::Approx(3.0).epsilon(1e-15));
    CHECK_THROWS_AS(theta_exponents(6.0, 1.2), invalid_argument);
    CHECK_THROWS_AS(theta_exponents(1.5, 0.5), invalid_argument);

    CHECK(interpolated_constant_bound(7.3, 0.0, 0.4) == 1.0);
    CHECK(interpolated_constant_bound(7.3, 0.4, 0.4) == doctest::Approx(7.3).epsilon(1e-15));
    CHECK(std::log(interpolated_constant_bound(5.0, 0.1, 0.4)) ==
          doctest::Approx(0.25 * std::log(5.0)).epsilon(1e-14));
    CHECK_THROWS_AS(interpolated_constant_bound(-1.0, 0.1, 0.4), invalid_argument);
    CHECK_THROWS_AS(interpolated_constant_bound(5.0, 0.5, 0.4), invalid_argument);
}

TEST_CASE("interpolation path slopes at the three named endpoints") {
    // Sobolev endpoint: no weight, slope (4/d, 0)
    auto sob = derivative_coefficients(3, 0.3, 6.0 / 2.4);
    CHECK(sob.dp_ds == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
    CHECK(sob.dbeta_ds == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
    // p1 = 2: pure weight movement
    auto hardy = derivative_coefficients(3, 0.3, 2.0);
    CHECK(hardy.dp_ds == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
    CHECK(hardy.dbeta_ds == doctest::Approx(1.0).epsilon(1e-12));
    // upper endpoint: dbeta/ds = 1 - d
    auto upper = derivative_coefficients(3, 0.2, 10.0 / 3.0);
    CHECK(upper.dbeta_ds == doctest::Approx(1.0 - 3.0).epsilon(1e-12));
    // dbeta/ds decreases as p1 grows across [2, 2/(1-2 s1)]
    double prev = derivative_coefficients(3, 0.2, 2.0).dbeta_ds;
    for (double p1 : {2.4, 2.8, 3.1, 10.0 / 3.0}) {
        const double cur = derivative_coefficients(3, 0.2, p1).dbeta_ds;
        CHECK(cur < prev);
        prev = cur;
    }
    CHECK_THROWS_AS(derivative_coefficients(3, 0.0, 2.0), invalid_argument);
    CHECK_THROWS_AS(derivative_coefficients(3, 0.3, 7.0), invalid_argument);
}

TEST_CASE("entropy-sum bound values") {
    CHECK(beckner_bound(1) == doctest::Approx(-0.15342640972002734529).epsilon(1e-14));
    CHECK(beckner_bound(2) == doctest::Approx(2.0 * beckner_bound(1)).epsilon(1e-15));
    for (int d = 1; d <= 8; ++d) CHECK(beckner_bound(d) < 0.0);
    CHECK_THROWS_AS(beckner_bound(0), invalid_argument);
}

TEST_CASE("dilation family right side and its minimizer") {
    CHECK(log_sobolev_rhs(3, 1.0, 2.2) ==
          doctest::Approx(2.2 / M_PI - 3.0).epsilon(1e-14));
    // stationarity at a* = sqrt(pi d / (2 grad_sq))
    const double g = 2.7;
    const double a_star = std::sqrt(M_PI * 3.0 / (2.0 * g));
    const double at_min = log_sobolev_rhs(3, a_star, g);
    CHECK(at_min < log_sobolev_rhs(3, a_star * 1.05, g));
    CHECK(at_min < log_sobolev_rhs(3, a_star * 0.95, g));
    // unit-norm Gaussian: grad_sq = d/2 and the optimal a = sqrt(pi)
    for (int d : {1, 2, 3}) {
        CHECK(log_sobolev_rhs(d, std::sqrt(M_PI), 0.5 * d) ==
              doctest::Approx(-0.5 * d * (1.0 + std::log(M_PI))).epsilon(1e-14));
    }
    CHECK_THROWS_AS(log_sobolev_rhs(3, 0.0, 1.0), invalid_argument);
    CHECK_THROWS_AS(log_sobolev_rhs(3, 1.0, -1.0), invalid_argument);
}
