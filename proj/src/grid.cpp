#include "loguncert/grid.hpp"

#include <atomic>
#include <cmath>

#include "loguncert/errors.hpp"
#include "loguncert/quadrature.hpp"
#include "loguncert/special.hpp"

namespace loguncert {
namespace {

constexpr std::size_t kPanelOrder = 16;

std::uint64_t next_serial() {
    static std::atomic<std::uint64_t> counter{1};
    return counter.fetch_add(1);
}

// Appends one Gauss-Legendre panel on [lo, hi]; weight carries the radial
// measure omega r^{d-1} so downstream sums need no extra factors.
void add_panel(RadialGrid& g, double lo, double hi, std::size_t order, double omega) {
    const GaussRule& rule = gauss_legendre(order);
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    if (g.panel_edges.empty()) g.panel_edges.push_back(lo);
    g.panel_edges.push_back(hi);
    g.panel_starts.push_back(g.nodes.size());
    for (std::size_t k = 0; k < order; ++k) {
        const double r = mid + half * rule.nodes[k];
        const double w = half * rule.weights[k];
        g.nodes.push_back(r);
        g.weights.push_back(w * omega * std::pow(r, g.dimension - 1));
    }
}

void build_composite(RadialGrid& g, double r_max, std::size_t n, double omega) {
    const std::size_t panels = n / kPanelOrder;
    const std::size_t rem = n % kPanelOrder;
    // Geometric sub-panels (ratio 2) replace the first uniform panel: the
    // integrands carry log r and r^{-beta} factors whose quadrature error
    // on a single panel touching 0 would dominate the whole sum.
    const std::size_t graded = std::min<std::size_t>(14, panels - 1);
    const double h = r_max / static_cast<double>(panels - graded);
    double t = h * std::ldexp(1.0, -static_cast<int>(graded));
    // Leftover nodes (n not a multiple of 16) raise the innermost panel's order.
    add_panel(g, 0.0, t, kPanelOrder + rem, omega);
    for (std::size_t j = 0; j < graded; ++j) {
        add_panel(g, t, 2.0 * t, kPanelOrder, omega);
        t *= 2.0;
    }
    for (std::size_t j = 1; j < panels - graded; ++j)
        add_panel(g, j * h, (j + 1) * h, kPanelOrder, omega);
}

void build_log_uniform(RadialGrid& g, double r_max, std::size_t n, double omega) {
    const double r_min = r_max * 1e-10;
    const double u_lo = std::log(r_min);
    const double u_hi = std::log(r_max);
    const std::size_t panels = n / kPanelOrder;
    const std::size_t rem = n % kPanelOrder;
    const double du = (u_hi - u_lo) / static_cast<double>(panels);
    for (std::size_t j = 0; j < panels; ++j) {
        const std::size_t order = (j == 0) ? kPanelOrder + rem : kPanelOrder;
        const GaussRule& rule = gauss_legendre(order);
        const double mid = u_lo + (j + 0.5) * du;
        if (g.panel_edges.empty()) g.panel_edges.push_back(r_min);
        g.panel_edges.push_back(j + 1 == panels ? r_max : std::exp(u_lo + (j + 1) * du));
        g.panel_starts.push_back(g.nodes.size());
        for (std::size_t k = 0; k < order; ++k) {
            const double u = mid + 0.5 * du * rule.nodes[k];
            const double r = std::exp(u);
            // dr = r du, so the measure gains one power of r.
            g.nodes.push_back(r);
            g.weights.push_back(0.5 * du * rule.weights[k] * omega *
                                std::pow(r, g.dimension));
        }
    }
}

}  // namespace

double sphere_area(int d) {
    require(d >= 1, "sphere_area: dimension must be >= 1");
    return 2.0 * std::exp(0.5 * d * std::log(M_PI) - log_gamma(0.5 * d));
}

GridPtr make_grid(int d, double r_max, std::size_t n, GridScheme scheme) {
    require(d >= 1, "make_grid: dimension must be >= 1");
    require(n >= 16, "make_grid: resolution must be >= 16");
    require(r_max > 0.0, "make_grid: r_max must be positive");
    auto g = std::make_shared<RadialGrid>();
    g->dimension = d;
    g->r_max = r_max;
    g->scheme = scheme;
    g->serial = next_serial();
    g->nodes.reserve(n);
    g->weights.reserve(n);
    const double omega = sphere_area(d);
    if (scheme == GridScheme::composite_gauss)
        build_composite(*g, r_max, n, omega);
    else
        build_log_uniform(*g, r_max, n, omega);
    g->panel_starts.push_back(g->nodes.size());
    return g;
}

double volume_integral(const RadialProfile& g) {
    require(g.grid != nullptr, "volume_integral: profile has no grid");
    require(g.values.size() == g.grid->size(),
            "volume_integral: value count does not match grid");
    long double acc = 0.0L;
    for (std::size_t i = 0; i < g.values.size(); ++i)
        acc += static_cast<long double>(g.grid->weights[i]) * g.values[i];
    return static_cast<double>(acc);
}

namespace {
template <typename Profile>
double l2_norm_impl(const Profile& f) {
    long double acc = 0.0L;
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        const long double v = f.values[i];
        acc += static_cast<long double>(f.grid->weights[i]) * v * v;
    }
    return static_cast<double>(std::sqrt(static_cast<double>(acc)));
}
}  // namespace

double l2_norm(const RadialProfile& f) { return l2_norm_impl(f); }
double l2_norm(const SpectralProfile& f) { return l2_norm_impl(f); }

RadialProfile normalize_l2(const RadialProfile& f) {
    const double norm = l2_norm(f);
    if (!(norm > 0.0) || !std::isfinite(norm))
        throw invalid_argument("normalize_l2: zero or non-finite function");
    RadialProfile out;
    out.grid = f.grid;
    out.values.reserve(f.values.size());
    for (double v : f.values) out.values.push_back(v / norm);
    return out;
}

}  // namespace loguncert
