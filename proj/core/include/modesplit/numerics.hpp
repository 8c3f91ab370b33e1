#pragma once

#include <span>
#include <vector>

#include "modesplit/grid.hpp"

namespace modesplit::numerics {

/// First derivative on a uniform grid: the diagonal-norm summation-by-parts
/// operator with fourth-order centered differences in the interior and a
/// second-order closure on the four outermost samples at each end. With
/// W = norm_weights, W D + (W D)^T = diag(-1, 0, ..., 0, 1). Requires at
/// least 8 samples.
Field derivative(std::span<const double> f, double dz);

/// Same operator writing into `out` (same size as f, not aliasing it).
void derivative_into(std::span<const double> f, double dz, std::span<double> out);

/// Quadrature weights of the derivative's norm:
/// dz * (17/48, 59/48, 43/48, 49/48, 1, ..., 1, 49/48, 43/48, 59/48, 17/48).
/// Exact for cubics.
Field norm_weights(std::size_t n, double dz);

/// sum_i norm_weights[i] f[i].
double integral(std::span<const double> f, double dz);

/// Cumulative composite trapezoid integral, out[0] = 0. O(dz^2).
Field cumulative_trapezoid(std::span<const double> f, double dz);

/// Cumulative integral from a piecewise cubic interpolant (four-point rule per
/// interval, one-sided at the ends), out[0] = 0. O(dz^4). Requires >= 4 samples.
Field cumulative_cubic(std::span<const double> f, double dz);

/// Composite trapezoid integral over the whole grid, O(dz^2).
double trapezoid(std::span<const double> f, double dz);

/// sqrt(sum f_i^2); on a uniform grid ratios of these are relative L2 norms.
double l2_norm(std::span<const double> f);

double max_abs(std::span<const double> f);

/// Solves a tridiagonal system by the Thomas algorithm.
/// lower[0] and upper[n-1] are ignored. Throws NumericalFailure on a zero or
/// non-finite pivot.
std::vector<double> solve_tridiagonal(std::span<const double> lower,
                                      std::span<const double> diag,
                                      std::span<const double> upper,
                                      std::span<const double> rhs);

}  // namespace modesplit::numerics
