#pragma once

#include "loguncert/grid.hpp"

namespace loguncert {

// Radial Fourier transform under the unitary convention
//   fhat(rho) = (2 pi)^{-d/2} int f(|x|) e^{-i rho e.x} dx
//             = int_0^inf f(r) h(r rho) r^{d-1} dr,  h = fourier_kernel.
// Realized as a dense quadrature matrix per (input grid, output grid) pair,
// cached on grid serials. The kernel is self-inverse on radial profiles.
SpectralProfile fourier_radial(const RadialProfile& f, const GridPtr& out_grid);
SpectralProfile fourier_radial(const RadialProfile& f);  // self-dual layout

RadialProfile fourier_radial_inverse(const SpectralProfile& F, const GridPtr& out_grid);
RadialProfile fourier_radial_inverse(const SpectralProfile& F);

// |D|^s: multiply the Fourier data by rho^s and transform back.
// Requires s > -d/2 so rho^{2s} stays integrable at the origin.
RadialProfile apply_fractional(const RadialProfile& f, double s);

}  // namespace loguncert
