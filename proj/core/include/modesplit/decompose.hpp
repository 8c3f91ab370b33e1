#pragma once

#include <span>
#include <variant>

#include "modesplit/background.hpp"
#include "modesplit/fields.hpp"

namespace modesplit {

/// Acoustic and entropy parts of a total field; acoustic + entropy == total.
/// The entropy part carries no velocity.
struct ModeSplit {
  FieldState acoustic;
  FieldState entropy;
};

/// Homogeneous solutions of the R equation with R1(0) = 1, R2(0) = 0 and unit
/// Wronskian R1 R2' - R1' R2 = 1.
struct HomogeneousPair {
  Field R1;
  Field R2;
};

/// Closed forms for the linear scale-height law (alpha = 0 branch below the
/// isothermal threshold). Throws SingularParameter for alphaH0 == -1.
HomogeneousPair homogeneous_solutions(const BackgroundProfile& profile);

/// Coefficient q(z) = (1 + 2 H0 eta') / (4 H0^2 eta^2) of the normalized
/// equation R'' - q R = D.
Field r_equation_coefficient(const BackgroundProfile& profile);

/// Source term D = -(2 Phi + (gamma - 2 - 2 gamma H0 eta d/dz) P) / (2 H0^2 eta gamma^2).
Field rhs_D(std::span<const double> P, std::span<const double> Phi,
            const BackgroundProfile& profile);

enum class QuadratureRule {
  /// Fourth-order cumulative rule from piecewise cubic interpolation. Default.
  cubic,
  /// Cumulative composite trapezoid, O(dz^2).
  trapezoid,
};

/// Variation of parameters:
///   R = R2 int_0^z R1 D - R1 int_0^z R2 D + C1 R1 + C2 R2.
Field solve_R_quadrature(std::span<const double> D, const BackgroundProfile& profile,
                         double C1, double C2, QuadratureRule rule = QuadratureRule::cubic);

/// Constants (C1, C2) that make the quadrature solution take the values
/// r_lo at z = 0 and r_hi at z = h.
struct QuadratureConstants {
  double C1;
  double C2;
};
QuadratureConstants fit_quadrature_constants(std::span<const double> D,
                                             const BackgroundProfile& profile, double r_lo,
                                             double r_hi,
                                             QuadratureRule rule = QuadratureRule::cubic);

struct DirichletZero {};
struct MatchValues {
  double r_lo;
  double r_hi;
};
using RBoundary = std::variant<DirichletZero, MatchValues>;

enum class BvpScheme {
  /// Fourth-order compact (Numerov) three-point stencil. Default.
  numerov,
  /// Plain second-order central difference.
  three_point,
};

/// Direct finite-difference solve of
///   (1 + 2 H0 eta' - 4 H0^2 eta^2 d^2/dz^2) R = -4 H0^2 eta^2 D
/// with a tridiagonal system. Throws NumericalFailure if the system is
/// singular.
Field solve_R_bvp(std::span<const double> D, const BackgroundProfile& profile,
                  const RBoundary& bc = DirichletZero{}, BvpScheme scheme = BvpScheme::numerov);

/// Residual of the discrete R operator (the same stencil the BVP solver uses)
/// at interior samples, written in the un-normalized form
///   (1 + 2 H0 eta') R - 4 H0^2 eta^2 R''  minus  -4 H0^2 eta^2 D.
/// Boundary entries are zero.
Field r_operator_residual(std::span<const double> R, std::span<const double> D,
                          const BackgroundProfile& profile,
                          BvpScheme scheme = BvpScheme::numerov);

enum class SolveMethod { bvp, quadrature };

struct DecomposeOptions {
  SolveMethod method = SolveMethod::bvp;
  RBoundary bc = DirichletZero{};
  BvpScheme scheme = BvpScheme::numerov;
  QuadratureRule rule = QuadratureRule::cubic;
};

/// Unique acoustic/entropy split of `total`. Throws UnstableBackground when
/// nu <= 0 and propagates solver errors.
ModeSplit decompose(const FieldState& total, const BackgroundProfile& profile,
                    const DecomposeOptions& options = {});

}  // namespace modesplit
