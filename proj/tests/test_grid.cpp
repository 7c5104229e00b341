#include <cmath>
#include <functional>

#include "doctest.h"
#include "loguncert/errors.hpp"
#include "loguncert/grid.hpp"

using namespace loguncert;

namespace {

// Independent oracle: adaptive Simpson on [a, b], no shared code with the grid.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol) {
    auto simpson = [&](double lo, double hi) {
        double mid = 0.5 * (lo + hi);
        return (hi - lo) / 6.0 * (f(lo) + 4.0 * f(mid) + f(hi));
    };
    std::function<double(double, double, double, double, int)> rec =
        [&](double lo, double hi, double whole, double eps, int depth) {
            double mid = 0.5 * (lo + hi);
            double left = simpson(lo, mid), right = simpson(mid, hi);
            if (depth <= 0 || std::abs(left + right - whole) < 15.0 * eps)
                return left + right + (left + right - whole) / 15.0;
            return rec(lo, mid, left, 0.5 * eps, depth - 1) +
                   rec(mid, hi, right, 0.5 * eps, depth - 1);
        };
    return rec(a, b, simpson(a, b), tol, 40);
}

double gaussian_error(int d, std::size_t n, double r_max, GridScheme scheme) {
    auto grid = make_grid(d, r_max, n, scheme);
    auto f = sample(grid, [](double r) { return std::exp(-r * r); });
    double exact = std::pow(M_PI, 0.5 * d);
    return std::abs(volume_integral(f) - exact) / exact;
}

}  // namespace

TEST_CASE("sphere_area closed values") {
    CHECK(sphere_area(1) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(sphere_area(2) == doctest::Approx(2.0 * M_PI).epsilon(1e-14));
    CHECK(sphere_area(3) == doctest::Approx(4.0 * M_PI).epsilon(1e-14));
    CHECK(sphere_area(4) == doctest::Approx(2.0 * M_PI * M_PI).epsilon(1e-14));
    CHECK_THROWS_AS(sphere_area(0), invalid_argument);
}

TEST_CASE("make_grid validates arguments") {
    CHECK_THROWS_AS(make_grid(0, 10.0, 256), invalid_argument);
    CHECK_THROWS_AS(make_grid(3, 10.0, 8), invalid_argument);
    CHECK_THROWS_AS(make_grid(3, -1.0, 256), invalid_argument);
}

TEST_CASE("grid invariants: positive ascending nodes, positive weights") {
    for (auto scheme : {GridScheme::composite_gauss, GridScheme::log_uniform}) {
        for (std::size_t n : {16u, 100u, 256u}) {
            auto g = make_grid(3, 10.0, n, scheme);
            REQUIRE(g->nodes.size() == n);
            REQUIRE(g->weights.size() == n);
            CHECK(g->nodes.front() > 0.0);
            for (std::size_t i = 1; i < n; ++i) CHECK(g->nodes[i] > g->nodes[i - 1]);
            for (double w : g->weights) CHECK(w > 0.0);
            CHECK(g->nodes.back() < g->r_max);
        }
    }
}

TEST_CASE("Gaussian integral reproduces pi^{d/2} at default resolution") {
    for (int d : {1, 2, 3}) {
        CHECK(gaussian_error(d, 2048, 12.0, GridScheme::composite_gauss) < 1e-8);
        CHECK(gaussian_error(d, 2048, 18.0, GridScheme::composite_gauss) < 1e-8);
        CHECK(gaussian_error(d, 2048, 18.0, GridScheme::log_uniform) < 1e-8);
    }
}

TEST_CASE("volume_integral oracle: exponential profile in d=3") {
    auto grid = make_grid(3, 40.0, 2048);
    auto f = sample(grid, [](double r) { return std::exp(-r); });
    double oracle = adaptive_simpson(
        [](double r) { return 4.0 * M_PI * r * r * std::exp(-r); }, 0.0, 40.0, 1e-12);
    double got = volume_integral(f);
    CHECK(got == doctest::Approx(oracle).epsilon(1e-9));
    CHECK(got == doctest::Approx(25.132741228718345908).epsilon(1e-9));  // 8 pi
}

TEST_CASE("volume_integral of the zero profile is zero") {
    auto grid = make_grid(2, 10.0, 256);
    auto z = sample(grid, [](double) { return 0.0; });
    CHECK(volume_integral(z) == 0.0);
}

TEST_CASE("unit disk area in d=2") {
    auto grid = make_grid(2, 12.0, 2048);
    auto ind = sample(grid, [](double r) { return r <= 1.0 ? 1.0 : 0.0; });
    // the disk edge falls inside one panel; error is bounded by that panel's mass
    CHECK(std::abs(volume_integral(ind) - M_PI) < 0.7);
}

TEST_CASE("quadrature exactness on polynomials times the radial measure") {
    // degree <= 16 polynomial against r^{d-1}: inside the per-panel Gauss order
    auto grid = make_grid(3, 5.0, 512);
    auto f = sample(grid, [](double r) {
        return 1.0 + r + 0.5 * std::pow(r, 5) + 2e-4 * std::pow(r, 16);
    });
    const double R = 5.0;
    auto term = [&](double c, int k) {
        // integral of c r^k * 4 pi r^2 on [0, R]
        return c * 4.0 * M_PI * std::pow(R, k + 3) / (k + 3);
    };
    double exact = term(1.0, 0) + term(1.0, 1) + term(0.5, 5) + term(2e-4, 16);
    CHECK(std::abs(volume_integral(f) - exact) / exact < 1e-10);
}

TEST_CASE("normalize_l2 basics") {
    auto grid = make_grid(3, 14.0, 1024);
    auto f = sample(grid, [](double r) { return std::exp(-0.5 * r * r); });

    auto unit = normalize_l2(f);
    CHECK(l2_norm(unit) == doctest::Approx(1.0).epsilon(1e-12));

    // e^{-r^2/2} has L2 norm pi^{d/4}
    for (std::size_t i = 0; i < unit.values.size(); ++i)
        CHECK(unit.values[i] ==
              doctest::Approx(f.values[i] * std::pow(M_PI, -0.75)).epsilon(1e-10));

    // idempotence
    auto twice = normalize_l2(unit);
    for (std::size_t i = 0; i < unit.values.size(); ++i)
        CHECK(twice.values[i] == doctest::Approx(unit.values[i]).epsilon(1e-12));

    // scale invariance
    auto scaled = f;
    for (double& v : scaled.values) v *= 37.5;
    auto unit2 = normalize_l2(scaled);
    for (std::size_t i = 0; i < unit.values.size(); ++i)
        CHECK(unit2.values[i] == doctest::Approx(unit.values[i]).epsilon(1e-12));

    auto zero = sample(grid, [](double) { return 0.0; });
    CHECK_THROWS_AS(normalize_l2(zero), invalid_argument);
}

TEST_CASE("refinement convergence: doubling n shrinks the Gaussian error by 4x") {
    // coarse enough that the error sits well above the rounding floor
    double e32 = gaussian_error(3, 32, 16.0, GridScheme::composite_gauss);
    double e64 = gaussian_error(3, 64, 16.0, GridScheme::composite_gauss);
    REQUIRE(e32 > 1e-14);
    CHECK(e64 * 4.0 <= e32);
}
