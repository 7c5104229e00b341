#pragma once

#include <vector>

#include "loguncert/grid.hpp"

namespace loguncert {

enum class KernelType { power, log };

// True when the spherical mean below is +infinity at r = s: the angular
// integral of |x-y|^{-lambda} diverges for lambda >= d-1, and in d = 1 the
// two-point angular set always hits |x-y| = 0.
bool kernel_diagonal_infinite(int d, KernelType type, double lambda);

// Spherical mean of |x-y|^{-lambda} (power) or -log|x-y| (log) over the angle
// between x and y with |x| = r, |y| = s. lambda is ignored for the log kernel.
// Returns +infinity on a diagonal the mean does not integrate over.
double radial_kernel(int d, KernelType type, double lambda, double r, double s);

// Mean of radial_kernel(d, type, lambda, r, .) over a radial cell [lo, hi]
// strictly containing r. Finite for lambda < d even when the pointwise
// diagonal is infinite.
double radial_kernel_cell_average(int d, KernelType type, double lambda, double r,
                                  double lo, double hi);

// Cached symmetric matrix K[i*n + j] such that sum_ij w_i w_j f_i f_j K_ij
// approximates the double integral of f(x) k(|x-y|) f(y). Away from the
// diagonal the entries are pointwise kernel values; within one quadrature
// panel of the diagonal the kernel is singular (or cusped) on the panel
// scale, so those entries are re-derived by integrating the kernel against
// the panel's interpolation basis with a mesh graded into the singularity.
// Plain point sampling there stalls the convergence of the energies at
// O(h^{1-mu}) with mu the 1-d singularity exponent; the corrected rows
// integrate the singular factor exactly and leave only smooth-part error.
// Requires lambda < d for the power kernel (the row integrals diverge
// otherwise).
const std::vector<double>& kernel_matrix(const GridPtr& grid, KernelType type, double lambda);

namespace detail {
// Normalized angular quadrature behind the generic-dimension path; exposed so
// tests can pit it against the closed forms used on the d = 3 fast path.
double angular_mean(int d, KernelType type, double lambda, double r, double s);
}  // namespace detail

}  // namespace loguncert
