#include "loguncert/bessel.hpp"

#include <cmath>
#include <cstdlib>

#include "loguncert/errors.hpp"
#include "loguncert/quadrature.hpp"

namespace loguncert {
namespace {

constexpr double kCrossover = 19.0;

// Ascending series for (x/2)^{-nu} J_nu(x) = sum (-1)^k (x^2/4)^k / (k! Gamma(nu+k+1)).
// Extended precision absorbs the alternating-sum cancellation up to x ~ 21.
long double scaled_series(double nu, double x) {
    const long double q = 0.25L * static_cast<long double>(x) * x;
    long double term = 1.0L / tgammal(static_cast<long double>(nu) + 1.0L);
    long double sum = term;
    for (int k = 1; k < 200; ++k) {
        term *= -q / (static_cast<long double>(k) * (nu + k));
        sum += term;
        if (fabsl(term) < 1e-22L * fabsl(sum) && k > 0.5 * x) break;
    }
    return sum;
}

// Hankel expansion J_nu ~ sqrt(2/(pi x)) (P cos chi - Q sin chi); terminates
// for half-integer nu, truncated at the smallest term otherwise. Accurate to
// ~1e-12 for x >= max(19, nu^2).
double asymptotic_j(double nu, double x) {
    const long double mu = 4.0L * nu * nu;
    long double a = 1.0L;  // a_k = prod (mu - (2j-1)^2) / (k! 8^k), times x^{-k}
    long double P = 1.0L, Q = 0.0L;
    long double prev = 1e30L;
    for (int k = 1; k <= 40; ++k) {
        a *= (mu - (2.0L * k - 1.0L) * (2.0L * k - 1.0L)) / (8.0L * k * x);
        const long double mag = fabsl(a);
        if (mag > prev) break;  // divergent tail reached
        prev = mag;
        const int phase = (k / 2) % 2 ? -1 : 1;
        if (k % 2 == 1)
            Q += phase * a;
        else
            P += phase * a;
        if (mag < 1e-20L) break;
    }
    const long double chi =
        x - (0.5L * nu + 0.25L) * 3.14159265358979323846264338327950288L;
    return static_cast<double>(sqrtl(2.0L / (3.14159265358979323846264338327950288L * x)) *
                               (P * cosl(chi) - Q * sinl(chi)));
}

// (1/pi) int_0^pi cos(m theta - x sin theta) d theta, paneled to resolve the
// oscillations; integer m only.
double integral_j(int m, double x) {
    const int panels = static_cast<int>((x + m) / 24.0) + 2;
    const GaussRule& rule = gauss_legendre(32);
    const double h = M_PI / panels;
    long double acc = 0.0L;
    for (int p = 0; p < panels; ++p) {
        const double mid = (p + 0.5) * h;
        for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
            const double th = mid + 0.5 * h * rule.nodes[k];
            acc += 0.5 * h * rule.weights[k] * std::cos(m * th - x * std::sin(th));
        }
    }
    return static_cast<double>(acc / 3.14159265358979323846264338327950288L);
}

// Spherical j_l by downward recurrence (stable), normalized at j_0 = sin x / x.
double spherical_j(int l, double x) {
    const int start = l + 24 + static_cast<int>(std::sqrt(40.0 * l));
    long double jp = 0.0L, jc = 1e-30L;
    long double scale_target = 0.0L;
    for (int k = start; k >= 0; --k) {
        const long double jm = (2.0L * k + 3.0L) / x * jc - jp;
        jp = jc;
        jc = jm;
        if (k == l) scale_target = jc;
        if (fabsl(jc) > 1e250L) {  // renormalize to dodge overflow
            jp /= 1e250L;
            jc /= 1e250L;
            scale_target /= 1e250L;
        }
    }
    const long double j0 = sinl(static_cast<long double>(x)) / x;
    return static_cast<double>(scale_target * (j0 / jc));
}

bool is_half_integer(double nu) { return std::abs(nu - std::floor(nu) - 0.5) < 1e-12; }
bool is_integer(double nu) { return std::abs(nu - std::round(nu)) < 1e-12; }

}  // namespace

double bessel_j(double nu, double x) {
    require(nu >= -0.5, "bessel_j: order must be >= -1/2");
    require(x >= 0.0, "bessel_j: argument must be >= 0");
    if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
    const double x_asym = std::max(kCrossover, nu * nu);
    if (x >= x_asym) return asymptotic_j(nu, x);
    if (x < kCrossover)
        return static_cast<double>(powl(0.5L * static_cast<long double>(x), nu) *
                                   scaled_series(nu, x));
    // mid range only arises for nu > sqrt(19)
    if (is_integer(nu)) return integral_j(static_cast<int>(std::round(nu)), x);
    if (is_half_integer(nu)) {
        const int l = static_cast<int>(std::round(nu - 0.5));
        return std::sqrt(2.0 * x / M_PI) * spherical_j(l, x);
    }
    throw numerical_failure("bessel_j: mid-range non-(half-)integer order unsupported");
}

double fourier_kernel(int d, double x) {
    require(d >= 1, "fourier_kernel: dimension must be >= 1");
    require(x >= 0.0, "fourier_kernel: argument must be >= 0");
    static const double root_2_pi = std::sqrt(2.0 / M_PI);
    if (d == 1) return root_2_pi * std::cos(x);
    if (d == 3) {
        if (x < 1e-4) return root_2_pi * (1.0 - x * x / 6.0);
        return root_2_pi * std::sin(x) / x;
    }
    const double nu = 0.5 * (d - 2);
    if (x < kCrossover)  // series for the scaled kernel avoids 0^0 at x -> 0
        return static_cast<double>(powl(2.0L, -static_cast<long double>(nu)) *
                                   scaled_series(nu, x));
    return std::pow(x, -nu) * bessel_j(nu, x);
}

}  // namespace loguncert
