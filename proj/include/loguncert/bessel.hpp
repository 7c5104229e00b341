#pragma once

namespace loguncert {

// Bessel function J_nu(x) for nu >= -1/2, x >= 0.
// Power series below the crossover, Hankel asymptotic expansion above;
// mid-range large orders fall back to an integral representation (integer nu)
// or stabilized downward recurrence (half-integer nu).
double bessel_j(double nu, double x);

// Radial Fourier kernel h(x) = x^{-nu} J_nu(x) with nu = (d-2)/2, the
// angular average of e^{-i xi.x} over the unit sphere divided by (2 pi)^{d/2}.
// h(0) = 2^{-nu}/Gamma(nu+1). d = 1 and d = 3 reduce to sqrt(2/pi) cos x and
// sqrt(2/pi) sin(x)/x and are evaluated directly.
double fourier_kernel(int d, double x);

}  // namespace loguncert
