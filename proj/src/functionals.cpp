#include "loguncert/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "loguncert/errors.hpp"
#include "loguncert/kernels.hpp"
#include "loguncert/spectral.hpp"

namespace loguncert {

namespace {

bool close(double x, double y) {
    return std::abs(x - y) <= 1e-12 * std::max({1.0, std::abs(x), std::abs(y)});
}

void check_profile(const RadialProfile& f) {
    require(f.grid != nullptr, "profile has no grid");
    require(f.values.size() == f.grid->size(), "profile size does not match its grid");
}

double lp_of_values(const RadialProfile& f, const std::vector<double>& values, double p,
                    double beta) {
    const auto& grid = *f.grid;
    if (std::isinf(p)) {
        double best = 0.0;
        for (std::size_t i = 0; i < values.size(); ++i)
            best = std::max(best, std::pow(grid.nodes[i], -beta) * std::abs(values[i]));
        return best;
    }
    require(p >= 1.0, "Lebesgue exponent must be at least 1");
    require(beta * p < grid.dimension, "weight |x|^{-beta p} is not integrable near 0");
    long double acc = 0.0L;
    for (std::size_t i = 0; i < values.size(); ++i) {
        double v = std::abs(values[i]);
        if (v == 0.0) continue;
        acc += grid.weights[i] * std::pow(grid.nodes[i], -beta * p) * std::pow(v, p);
    }
    return std::pow(static_cast<double>(acc), 1.0 / p);
}

double quadratic_log_sum(const RadialProfile& f, bool log_of_value) {
    // sum w |f|^2 log|f|  or  sum w |f|^2 log r
    long double acc = 0.0L;
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        double v = f.values[i];
        if (log_of_value) {
            if (v == 0.0) continue;
            acc += f.grid->weights[i] * v * v * std::log(std::abs(v));
        } else {
            acc += f.grid->weights[i] * v * v * std::log(f.grid->nodes[i]);
        }
    }
    return static_cast<double>(acc);
}

double kernel_energy(const RadialProfile& f, KernelType type, double lambda) {
    const auto& K = kernel_matrix(f.grid, type, lambda);
    std::size_t n = f.grid->size();
    const auto& w = f.grid->weights;
    long double acc = 0.0L;
    for (std::size_t i = 0; i < n; ++i) {
        long double row = 0.0L;
        for (std::size_t j = 0; j < n; ++j) row += w[j] * f.values[j] * K[i * n + j];
        acc += w[i] * f.values[i] * row;
    }
    return static_cast<double>(acc);
}

}  // namespace

void validate_rubin_consistent(const InequalityParams& params) {
    require(params.d >= 1, "dimension must be positive");
    require(params.s >= 0.0 && params.s < 0.5 * params.d, "need 0 <= s < d/2");
    double p_cap = params.s < 0.5 ? 2.0 / (1.0 - 2.0 * params.s)
                                  : std::numeric_limits<double>::infinity();
    require(params.p >= 2.0 && params.p <= p_cap + 1e-12,
            "exponent must satisfy 2 <= p <= 2/(1-2s)");
    double want_beta = params.s + params.d / params.p - 0.5 * params.d;
    require(close(params.beta, want_beta), "weight power must equal s + d/p - d/2");
}

void validate_theta_consistent(const InequalityParams& params) {
    require(params.theta >= 0.0 && params.theta <= 1.0, "theta must lie in [0,1]");
    require(params.p1 >= 1.0, "endpoint exponent must be at least 1");
    double inv_p = (1.0 - params.theta) / 2.0 + params.theta / params.p1;
    require(close(1.0 / params.p, inv_p), "exponent must interpolate 1/p = (1-theta)/2 + theta/p1");
    require(close(params.beta, params.theta * params.beta1),
            "weight power must interpolate beta = theta * beta1");
}

double weighted_lp_norm(const RadialProfile& f, double p, double beta) {
    check_profile(f);
    return lp_of_values(f, f.values, p, beta);
}

double sobolev_norm(const RadialProfile& f, double s) {
    check_profile(f);
    require(s > -0.5 * f.grid->dimension, "smoothness order must exceed -d/2");
    SpectralProfile F = fourier_radial(f);
    long double acc = 0.0L;
    for (std::size_t j = 0; j < F.values.size(); ++j)
        acc += F.grid->weights[j] * std::pow(F.grid->nodes[j], 2.0 * s) * F.values[j] * F.values[j];
    return std::sqrt(static_cast<double>(acc));
}

double entropy(const RadialProfile& f) {
    check_profile(f);
    return quadratic_log_sum(f, true);
}

double log_moment_physical(const RadialProfile& f) {
    check_profile(f);
    return quadratic_log_sum(f, false);
}

double log_moment_fourier(const RadialProfile& f) {
    check_profile(f);
    SpectralProfile F = fourier_radial(f);
    long double acc = 0.0L;
    for (std::size_t j = 0; j < F.values.size(); ++j)
        acc += F.grid->weights[j] * F.values[j] * F.values[j] * std::log(F.grid->nodes[j]);
    return static_cast<double>(acc);
}

double hls_energy(const RadialProfile& f, double lambda) {
    check_profile(f);
    require(lambda > 0.0 && lambda < f.grid->dimension, "kernel power must lie in (0, d)");
    return kernel_energy(f, KernelType::power, lambda);
}

double log_hls_energy(const RadialProfile& f) {
    check_profile(f);
    return kernel_energy(f, KernelType::log, 0.0);
}

double lp_norm_spectral(const RadialProfile& f, double q) {
    check_profile(f);
    SpectralProfile F = fourier_radial(f);
    RadialProfile view{F.grid, F.values};
    return lp_of_values(view, F.values, q, 0.0);
}

double mass_entropy(const RadialProfile& f) {
    check_profile(f);
    long double acc = 0.0L;
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        double v = f.values[i];
        require(v >= 0.0, "mass entropy needs a nonnegative profile");
        if (v == 0.0) continue;
        acc += f.grid->weights[i] * v * std::log(v);
    }
    return static_cast<double>(acc);
}

}  // namespace loguncert
