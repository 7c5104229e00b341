#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace loguncert {

enum class GridScheme { composite_gauss, log_uniform };

// Radial quadrature for integrals over R^d of functions of |x|.
// Weights fold in the surface factor omega_{d-1} r^{d-1}, so
// sum_i w_i g(r_i) approximates the full d-dimensional integral of g(|x|).
// Nodes are strictly positive and ascending; there is never a node at r = 0.
struct RadialGrid {
    int dimension = 0;
    std::vector<double> nodes;
    std::vector<double> weights;
    double r_max = 0.0;
    GridScheme scheme = GridScheme::composite_gauss;
    std::uint64_t serial = 0;  // unique per grid; keys transform caches

    // Quadrature panel layout: panel p covers [panel_edges[p], panel_edges[p+1]]
    // and owns nodes [panel_starts[p], panel_starts[p+1]).  Kernel assembly
    // re-integrates singular kernels against the per-panel interpolation basis,
    // which needs the exact panel boundaries, not just the nodes.
    std::vector<double> panel_edges;
    std::vector<std::size_t> panel_starts;  // sentinel size() at the end

    std::size_t size() const { return nodes.size(); }
    std::size_t panel_count() const { return panel_edges.size() - 1; }
};

using GridPtr = std::shared_ptr<const RadialGrid>;

// Sampled radial function f(r_i) on a physical grid.
struct RadialProfile {
    GridPtr grid;
    std::vector<double> values;
};

// Same shape, interpreted on a frequency grid.
struct SpectralProfile {
    GridPtr grid;
    std::vector<double> values;
};

// Surface area of the unit sphere in R^d: 2 pi^{d/2} / Gamma(d/2).
double sphere_area(int d);

// Composite Gauss-Legendre panels with geometric grading toward r = 0
// (resolves integrable log / power singularities), or log-uniform panels
// in u = log r for power-law profiles. n is the total node count.
GridPtr make_grid(int d, double r_max, std::size_t n,
                  GridScheme scheme = GridScheme::composite_gauss);

// sum_i w_i g(r_i)
double volume_integral(const RadialProfile& g);

double l2_norm(const RadialProfile& f);
double l2_norm(const SpectralProfile& f);

// f / ||f||_2; throws on the zero function.
RadialProfile normalize_l2(const RadialProfile& f);

// Builds a profile by sampling fn at the grid nodes.
template <typename Fn>
RadialProfile sample(const GridPtr& grid, Fn&& fn) {
    RadialProfile f;
    f.grid = grid;
    f.values.reserve(grid->size());
    for (double r : grid->nodes) f.values.push_back(fn(r));
    return f;
}

}  // namespace loguncert
