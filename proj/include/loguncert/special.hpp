#pragma once

namespace loguncert {

// log Gamma(x) for x > 0.
double log_gamma(double x);

// Digamma psi(x) = Gamma'(x)/Gamma(x) for x > 0, relative error below 1e-13.
double digamma(double x);

}  // namespace loguncert
