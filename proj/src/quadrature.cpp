#include "loguncert/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "loguncert/errors.hpp"

namespace loguncert {
namespace {

// Value and derivative of the Legendre polynomial P_m at x, by upward recurrence.
std::pair<double, double> legendre(std::size_t m, double x) {
    double p0 = 1.0, p1 = x;
    for (std::size_t k = 2; k <= m; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    double dp = m * (x * p1 - p0) / (x * x - 1.0);
    return {p1, dp};
}

GaussRule build(std::size_t m) {
    require(m >= 1, "gauss_legendre: order must be >= 1");
    GaussRule rule;
    rule.nodes.resize(m);
    rule.weights.resize(m);
    for (std::size_t k = 0; k < m; ++k) {
        // Tricomi initial guess, then Newton; converges in < 6 steps.
        double x = std::cos(M_PI * (k + 0.75) / (m + 0.5));
        for (int it = 0; it < 60; ++it) {
            auto [p, dp] = legendre(m, x);
            double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        auto [p, dp] = legendre(m, x);
        (void)p;
        // k = 0 lands on the largest root; store reversed so nodes ascend.
        rule.nodes[m - 1 - k] = x;
        rule.weights[m - 1 - k] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

}  // namespace

const GaussRule& gauss_legendre(std::size_t order) {
    static std::mutex mu;
    static std::map<std::size_t, GaussRule> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, build(order)).first;
    return it->second;
}

}  // namespace loguncert
