#include "loguncert/trial.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

#include "loguncert/errors.hpp"
#include "loguncert/rng.hpp"

namespace loguncert {
namespace {

std::string format_scale(double a) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%g", a);
    return buf;
}

}  // namespace

double radial_hermite_mode(int d, int k, double r) {
    const double alpha = 0.5 * d - 1.0;
    const double x = r * r;
    // Generalized Laguerre three-term recurrence in the degree.
    double prev = 1.0;
    double cur = 1.0 + alpha - x;
    if (k == 0) cur = prev;
    for (int j = 2; j <= k; ++j) {
        const double next =
            ((2.0 * j - 1.0 + alpha - x) * cur - (j - 1.0 + alpha) * prev) / j;
        prev = cur;
        cur = next;
    }
    return cur * std::exp(-0.5 * x);
}

std::string describe(const TrialSpec& spec) {
    switch (spec.kind) {
        case TrialKind::gaussian:
            return "gaussian(a=" + format_scale(spec.a) + ")";
        case TrialKind::exponential:
            return "exponential(a=" + format_scale(spec.a) + ")";
        case TrialKind::poly_decay:
            return "poly-decay(a=" + format_scale(spec.a) +
                   ",k=" + std::to_string(spec.k) + ")";
        case TrialKind::radial_hermite:
            return "radial-hermite(k=" + std::to_string(spec.k) + ")";
        case TrialKind::random_schwartz:
            return "random-schwartz(seed=" + std::to_string(spec.seed) +
                   ",m=" + std::to_string(spec.m) + ")";
    }
    return "unknown-trial";
}

RadialProfile trial(const TrialSpec& spec, const GridPtr& grid) {
    require(static_cast<bool>(grid), "trial requires a grid");
    const int d = grid->dimension;
    switch (spec.kind) {
        case TrialKind::gaussian:
            require(spec.a > 0.0, "gaussian scale must be positive");
            return sample(grid, [&](double r) { return std::exp(-spec.a * r * r); });
        case TrialKind::exponential:
            require(spec.a > 0.0, "exponential scale must be positive");
            return sample(grid, [&](double r) { return std::exp(-spec.a * r); });
        case TrialKind::poly_decay:
            require(spec.a > 0.0, "poly-decay scale must be positive");
            require(spec.k >= d + 1,
                    "poly-decay power must be at least dimension + 1");
            return sample(grid, [&](double r) {
                return std::pow(1.0 + (r / spec.a) * (r / spec.a), -0.5 * spec.k);
            });
        case TrialKind::radial_hermite:
            require(spec.k >= 0, "mode index must be nonnegative");
            return sample(grid,
                          [&](double r) { return radial_hermite_mode(d, spec.k, r); });
        case TrialKind::random_schwartz: {
            require(spec.m >= 1, "mode count must be at least 1");
            std::mt19937_64 gen = seeded_engine(spec.seed, 0);
            std::vector<double> coeff(static_cast<std::size_t>(spec.m));
            // 1/(1+k^2) damping keeps the combination Schwartz-like while the
            // seeded normals vary the shape.
            for (int k = 0; k < spec.m; ++k)
                coeff[static_cast<std::size_t>(k)] =
                    standard_normal(gen) / (1.0 + static_cast<double>(k) * k);
            return sample(grid, [&](double r) {
                double acc = 0.0;
                for (int k = 0; k < spec.m; ++k)
                    acc += coeff[static_cast<std::size_t>(k)] *
                           radial_hermite_mode(d, k, r);
                return acc;
            });
        }
    }
    throw invalid_argument("unknown trial kind");
}

}  // namespace loguncert
