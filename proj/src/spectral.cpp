#include "loguncert/spectral.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "loguncert/bessel.hpp"
#include "loguncert/errors.hpp"

namespace loguncert {
namespace {

using Matrix = std::vector<double>;  // row-major, rows indexed by output node

std::shared_ptr<const Matrix> build_matrix(const RadialGrid& in, const RadialGrid& out) {
    const std::size_t n_in = in.size(), n_out = out.size();
    auto m = std::make_shared<Matrix>(n_in * n_out);
    const double inv_omega = 1.0 / sphere_area(in.dimension);
    for (std::size_t j = 0; j < n_out; ++j) {
        const double rho = out.nodes[j];
        double* row = m->data() + j * n_in;
        for (std::size_t i = 0; i < n_in; ++i)
            row[i] = in.weights[i] * inv_omega * fourier_kernel(in.dimension, in.nodes[i] * rho);
    }
    return m;
}

// Keyed on grid serials; grids are immutable, so a serial pair pins the matrix.
std::shared_ptr<const Matrix> transform_matrix(const GridPtr& in, const GridPtr& out) {
    static std::mutex mu;
    static std::map<std::pair<std::uint64_t, std::uint64_t>, std::shared_ptr<const Matrix>>
        cache;
    const auto key = std::make_pair(in->serial, out->serial);
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, build_matrix(*in, *out)).first;
    return it->second;
}

std::vector<double> apply(const Matrix& m, const std::vector<double>& v,
                          std::size_t n_out) {
    const std::size_t n_in = v.size();
    std::vector<double> out(n_out);
    for (std::size_t j = 0; j < n_out; ++j) {
        const double* row = m.data() + j * n_in;
        double acc = 0.0;
        for (std::size_t i = 0; i < n_in; ++i) acc += row[i] * v[i];
        out[j] = acc;
    }
    return out;
}

void check_compatible(const GridPtr& a, const GridPtr& b, const char* op) {
    require(a != nullptr && b != nullptr, std::string(op) + ": missing grid");
    require(a->dimension == b->dimension, std::string(op) + ": dimension mismatch");
}

}  // namespace

SpectralProfile fourier_radial(const RadialProfile& f, const GridPtr& out_grid) {
    check_compatible(f.grid, out_grid, "fourier_radial");
    require(f.values.size() == f.grid->size(), "fourier_radial: malformed profile");
    auto m = transform_matrix(f.grid, out_grid);
    return {out_grid, apply(*m, f.values, out_grid->size())};
}

SpectralProfile fourier_radial(const RadialProfile& f) {
    return fourier_radial(f, f.grid);
}

RadialProfile fourier_radial_inverse(const SpectralProfile& F, const GridPtr& out_grid) {
    check_compatible(F.grid, out_grid, "fourier_radial_inverse");
    require(F.values.size() == F.grid->size(), "fourier_radial_inverse: malformed profile");
    auto m = transform_matrix(F.grid, out_grid);
    return {out_grid, apply(*m, F.values, out_grid->size())};
}

RadialProfile fourier_radial_inverse(const SpectralProfile& F) {
    return fourier_radial_inverse(F, F.grid);
}

RadialProfile apply_fractional(const RadialProfile& f, double s) {
    require(f.grid != nullptr, "apply_fractional: missing grid");
    if (s <= -0.5 * f.grid->dimension)
        throw invalid_argument("apply_fractional: exponent s <= -d/2 is non-integrable");
    SpectralProfile F = fourier_radial(f);
    for (std::size_t j = 0; j < F.values.size(); ++j)
        F.values[j] *= std::pow(F.grid->nodes[j], s);
    return fourier_radial_inverse(F, f.grid);
}

}  // namespace loguncert
