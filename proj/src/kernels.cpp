#include "loguncert/kernels.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "loguncert/errors.hpp"
#include "loguncert/quadrature.hpp"
#include "loguncert/special.hpp"

namespace loguncert {

namespace {

double eval_kernel(KernelType type, double lambda, double q) {
    // q = |x - y|^2
    if (type == KernelType::power) return std::pow(q, -0.5 * lambda);
    return -0.5 * std::log(q);
}

// int_0^pi sin^{d-2} = sqrt(pi) Gamma((d-1)/2) / Gamma(d/2)
double sin_weight_mass(int d) {
    return std::exp(0.5 * std::log(M_PI) + log_gamma(0.5 * (d - 1)) - log_gamma(0.5 * d));
}

double kernel_d1(KernelType type, double lambda, double r, double s) {
    double a = std::abs(r - s), b = r + s;
    if (type == KernelType::power)
        return 0.5 * (std::pow(a, -lambda) + std::pow(b, -lambda));
    return -0.5 * (std::log(a) + std::log(b));
}

double kernel_d3_power(double lambda, double r, double s) {
    double a = std::abs(r - s), b = r + s;
    if (std::abs(lambda - 2.0) < 1e-12) {
        if (a == 0.0) return std::numeric_limits<double>::infinity();
        return std::log(b / a) / (2.0 * r * s);
    }
    double e = 2.0 - lambda;
    return (std::pow(b, e) - std::pow(a, e)) / (2.0 * r * s * e);
}

double kernel_d3_log(double r, double s) {
    auto F = [](double t) { return t == 0.0 ? 0.0 : 0.5 * t * t * (2.0 * std::log(t) - 1.0); };
    double a = std::abs(r - s), b = r + s;
    return -(F(b) - F(a)) / (4.0 * r * s);
}

}  // namespace

bool kernel_diagonal_infinite(int d, KernelType type, double lambda) {
    if (type == KernelType::power) return lambda >= static_cast<double>(d - 1);
    return d == 1;
}

namespace detail {

double angular_mean(int d, KernelType type, double lambda, double r, double s) {
    require(d >= 2, "angular quadrature needs d >= 2");
    const GaussRule& rule = gauss_legendre(16);
    long double acc = 0.0L;
    auto add_panel = [&](double t0, double t1) {
        long double p = 0.0L;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            double th = 0.5 * (t0 + t1) + 0.5 * (t1 - t0) * rule.nodes[i];
            double sh = std::sin(0.5 * th);
            // |x-y|^2 without the r^2 + s^2 - 2rs cos cancellation
            double q = (r - s) * (r - s) + 4.0 * r * s * sh * sh;
            p += rule.weights[i] * std::pow(std::sin(th), d - 2) * eval_kernel(type, lambda, q);
        }
        acc += p * 0.5L * (t1 - t0);
    };
    if (r == s) {
        // integrable tip at theta = 0 (power needs lambda < d-1); the innermost
        // sliver is integrated in closed form from |x-y| ~ r theta
        const int levels = 44;
        double t = M_PI * std::ldexp(1.0, -levels);
        if (type == KernelType::power) {
            require(lambda < d - 1.0, "angular mean diverges on the diagonal");
            double e = d - 1.0 - lambda;
            acc += std::pow(r, -lambda) * std::pow(t, e) / e;
        } else {
            acc += std::pow(t, d - 1) / (d - 1.0) * (1.0 / (d - 1.0) - std::log(r * t));
        }
        for (int k = levels; k >= 1; --k)
            add_panel(M_PI * std::ldexp(1.0, -k), M_PI * std::ldexp(1.0, -(k - 1)));
    } else {
        // refine geometrically until panels resolve the near-singular scale
        double theta_c = std::abs(r - s) / std::sqrt(4.0 * r * s);
        int levels = 1;
        if (theta_c < M_PI) {
            levels = static_cast<int>(std::ceil(std::log2(M_PI / theta_c)));
            levels = std::clamp(levels, 1, 48);
        }
        add_panel(0.0, M_PI * std::ldexp(1.0, -levels));
        for (int k = levels; k >= 1; --k)
            add_panel(M_PI * std::ldexp(1.0, -k), M_PI * std::ldexp(1.0, -(k - 1)));
    }
    return static_cast<double>(acc) / sin_weight_mass(d);
}

}  // namespace detail

double radial_kernel(int d, KernelType type, double lambda, double r, double s) {
    require(d >= 1, "dimension must be positive");
    require(r > 0.0 && s > 0.0, "kernel radii must be positive");
    if (type == KernelType::power)
        require(lambda > 0.0, "kernel exponent must be positive");
    if (r == s && kernel_diagonal_infinite(d, type, lambda))
        return std::numeric_limits<double>::infinity();
    if (d == 1) return kernel_d1(type, lambda, r, s);
    if (d == 3) {
        return type == KernelType::power ? kernel_d3_power(lambda, r, s)
                                         : kernel_d3_log(r, s);
    }
    if (d == 2 && type == KernelType::log) return -std::log(std::max(r, s));
    return detail::angular_mean(d, type, lambda, r, s);
}

double radial_kernel_cell_average(int d, KernelType type, double lambda, double r,
                                  double lo, double hi) {
    require(lo >= 0.0 && lo < r && r < hi, "cell must strictly contain the node");
    if (type == KernelType::power)
        require(lambda < static_cast<double>(d), "cell average diverges for lambda >= d");
    double width = hi - lo;
    if (d == 1) {
        // both terms of the two-point mean have closed antiderivatives
        if (type == KernelType::power) {
            double e = 1.0 - lambda;
            double sing = (std::pow(r - lo, e) + std::pow(hi - r, e)) / e;
            double reg = (std::pow(r + hi, e) - std::pow(r + lo, e)) / e;
            return 0.5 * (sing + reg) / width;
        }
        auto G = [](double x) { return x * (1.0 - std::log(x)); };  // int -log
        double sing = G(r - lo) + G(hi - r);
        double reg = G(r + hi) - G(r + lo);
        return 0.5 * (sing + reg) / width;
    }
    // graded panels toward u = r from both sides; the dropped sliver of
    // relative width 2^{-levels} contributes O(2^{-levels (d-lambda)})
    int levels = 45;
    if (type == KernelType::power && d - lambda < 1.0)
        levels = std::clamp(static_cast<int>(std::ceil(52.0 / (d - lambda))), 52, 4000);
    const GaussRule& rule = gauss_legendre(8);
    long double acc = 0.0L;
    auto side = [&](double w, double sign) {
        for (int k = 0; k < levels; ++k) {
            double far = r - sign * w * std::ldexp(1.0, -k);
            double near = r - sign * w * std::ldexp(1.0, -(k + 1));
            // stop once the grading underflows double spacing near r
            if (far == near || near == r) break;
            long double p = 0.0L;
            for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
                double u = 0.5 * (far + near) + 0.5 * (near - far) * rule.nodes[i];
                if (u == r) continue;
                p += rule.weights[i] * radial_kernel(d, type, lambda, r, u);
            }
            acc += p * 0.5L * std::abs(near - far);
        }
    };
    side(r - lo, +1.0);
    side(hi - r, -1.0);
    return static_cast<double>(acc) / width;
}

namespace {

// 1-d singularity exponent across the diagonal: K(r, u) ~ |r - u|^{-mu}
// (log kernels count as mu = 0).
double band_exponent(int d, KernelType type, double lambda) {
    if (type == KernelType::power)
        return d == 1 ? lambda : std::max(0.0, lambda - (d - 1.0));
    return 0.0;
}

// Integrals of K(r, u) l_k(u) omega u^{d-1} over one quadrature panel [A, B],
// one per Lagrange basis polynomial l_k of the panel's nodes xs. The mesh is
// graded into u = r when r lies inside the panel (dropping a sliver whose
// relative size 2^{-levels (1-mu)} is below roundoff) and into the nearest
// edge when r sits just outside. Dividing entry k by the node's quadrature
// weight turns these into drop-in replacements for the point-sampled matrix
// entries; the row sum then integrates the singular factor exactly.
std::vector<double> panel_row_integrals(int d, KernelType type, double lambda,
                                        double r, double A, double B,
                                        const double* xs, std::size_t m) {
    const double mid = 0.5 * (A + B);
    const double sc = 2.0 / (B - A);
    std::vector<double> xi(m), bw(m, 1.0);
    for (std::size_t k = 0; k < m; ++k) xi[k] = (xs[k] - mid) * sc;
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t j = 0; j < m; ++j)
            if (j != k) bw[k] /= (xi[k] - xi[j]);
    const double omega = sphere_area(d);
    const GaussRule& rule = gauss_legendre(8);
    std::vector<long double> acc(m, 0.0L);
    std::vector<double> ell(m);
    auto add_interval = [&](double a, double b) {
        for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
            const double u = 0.5 * (a + b) + 0.5 * (b - a) * rule.nodes[q];
            if (u == r || u <= 0.0) continue;
            const double xu = (u - mid) * sc;
            double prod = 1.0;
            bool on_node = false;
            for (std::size_t k = 0; k < m; ++k) {
                if (xu == xi[k]) on_node = true;
                prod *= xu - xi[k];
            }
            if (on_node) {
                for (std::size_t k = 0; k < m; ++k) ell[k] = xu == xi[k] ? 1.0 : 0.0;
            } else {
                for (std::size_t k = 0; k < m; ++k) ell[k] = prod * bw[k] / (xu - xi[k]);
            }
            const double f = 0.5 * (b - a) * rule.weights[q] *
                             radial_kernel(d, type, lambda, r, u) * omega *
                             std::pow(u, d - 1);
            for (std::size_t k = 0; k < m; ++k)
                acc[k] += static_cast<long double>(f) * ell[k];
        }
    };
    auto ordered = [&](double a, double b) {
        if (a < b)
            add_interval(a, b);
        else
            add_interval(b, a);
    };
    if (r > A && r < B) {
        const double mu = band_exponent(d, type, lambda);
        const int levels =
            std::clamp(static_cast<int>(std::ceil(47.0 / (1.0 - mu))), 48, 900);
        auto side = [&](double w, double sign) {
            for (int k = 0; k < levels; ++k) {
                const double far = r - sign * w * std::ldexp(1.0, -k);
                const double near = r - sign * w * std::ldexp(1.0, -(k + 1));
                // stop once the grading underflows double spacing near r
                if (far == near || near == r) break;
                ordered(far, near);
            }
        };
        side(r - A, +1.0);
        side(B - r, -1.0);
    } else {
        const double w = B - A;
        const double e = r <= A ? A : B;
        const double dist = r <= A ? A - r : r - B;
        int levels = 2;
        if (dist < w)
            levels = std::clamp(
                static_cast<int>(std::ceil(std::log2(w / dist))) + 2, 2, 60);
        double prev = e == A ? B : A;
        for (int k = 1; k <= levels; ++k) {
            const double t = e == A ? A + w * std::ldexp(1.0, -k)
                                    : B - w * std::ldexp(1.0, -k);
            if (t == prev || t == e) break;
            ordered(prev, t);
            prev = t;
        }
        // the kernel is finite up to the edge here, so the last sliver stays
        if (prev != e) ordered(prev, e);
    }
    std::vector<double> out(m);
    for (std::size_t k = 0; k < m; ++k) out[k] = static_cast<double>(acc[k]);
    return out;
}

struct KernelKey {
    std::uint64_t serial;
    int type;
    double lambda;
    bool operator<(const KernelKey& o) const {
        return std::tie(serial, type, lambda) < std::tie(o.serial, o.type, o.lambda);
    }
};

std::map<KernelKey, std::shared_ptr<const std::vector<double>>>& kernel_cache() {
    static std::map<KernelKey, std::shared_ptr<const std::vector<double>>> cache;
    return cache;
}

std::mutex kernel_cache_mutex;

}  // namespace

const std::vector<double>& kernel_matrix(const GridPtr& grid, KernelType type, double lambda) {
    require(grid != nullptr, "kernel matrix needs a grid");
    const int d = grid->dimension;
    if (type == KernelType::power)
        require(lambda < static_cast<double>(d),
                "kernel matrix needs lambda < d, the row integrals diverge otherwise");
    KernelKey key{grid->serial, static_cast<int>(type), type == KernelType::log ? 0.0 : lambda};
    std::lock_guard<std::mutex> lock(kernel_cache_mutex);
    auto& cache = kernel_cache();
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;

    const std::size_t n = grid->size();
    auto matrix = std::make_shared<std::vector<double>>(n * n);
    const auto& r = grid->nodes;
    const bool diag_infinite = kernel_diagonal_infinite(d, type, lambda);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            const double k = radial_kernel(d, type, lambda, r[i], r[j]);
            (*matrix)[i * n + j] = k;
            (*matrix)[j * n + i] = k;
        }
        // the band correction below always rewrites the diagonal
        (*matrix)[i * n + i] =
            diag_infinite ? 0.0 : radial_kernel(d, type, lambda, r[i], r[i]);
    }

    // Band correction: entries whose column panel lies within one panel of
    // the row's node see the diagonal singularity (or cusp) at panel scale,
    // where point sampling is the accuracy bottleneck of the whole energy.
    const auto& edges = grid->panel_edges;
    const auto& starts = grid->panel_starts;
    const std::size_t panels = grid->panel_count();
    std::vector<std::size_t> node_panel(n);
    for (std::size_t p = 0; p < panels; ++p)
        for (std::size_t idx = starts[p]; idx < starts[p + 1]; ++idx) node_panel[idx] = p;
    // corr[i][slot]: row i integrated against panel node_panel[i] - 1 + slot,
    // already divided by the column weights; empty when point values suffice
    std::vector<std::array<std::vector<double>, 3>> corr(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t p = node_panel[i];
        for (int slot = 0; slot < 3; ++slot) {
            if (p + slot < 1 || p + slot - 1 >= panels) continue;
            const std::size_t q = p + slot - 1;
            const double lo = edges[q], hi = edges[q + 1];
            if (q != p) {
                // a full panel-width away the panel rule is already exact
                const double dist = r[i] < lo ? lo - r[i] : r[i] - hi;
                if (dist >= hi - lo) continue;
            }
            auto c = panel_row_integrals(d, type, lambda, r[i], lo, hi,
                                         grid->nodes.data() + starts[q],
                                         starts[q + 1] - starts[q]);
            for (std::size_t k = 0; k < c.size(); ++k)
                c[k] /= grid->weights[starts[q] + k];
            corr[i][slot] = std::move(c);
        }
    }
    // symmetrized overwrite; the outer index is the smaller of each pair, so
    // every band entry is written exactly once from its original values
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t p = node_panel[i];
        for (int slot = 0; slot < 3; ++slot) {
            if (p + slot < 1 || p + slot - 1 >= panels) continue;
            const std::size_t q = p + slot - 1;
            for (std::size_t j = std::max(starts[q], i); j < starts[q + 1]; ++j) {
                const int back = static_cast<int>(p) - static_cast<int>(q) + 1;
                const auto& ci = corr[i][slot];
                const auto& cj = corr[j][back];
                const double vij = ci.empty() ? (*matrix)[i * n + j] : ci[j - starts[q]];
                const double vji = cj.empty() ? (*matrix)[j * n + i] : cj[i - starts[p]];
                const double v = 0.5 * (vij + vji);
                (*matrix)[i * n + j] = v;
                (*matrix)[j * n + i] = v;
            }
        }
    }
    auto [pos, inserted] = cache.emplace(key, std::move(matrix));
    (void)inserted;
    return *pos->second;
}

}  // namespace loguncert
