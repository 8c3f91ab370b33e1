#pragma once

#include "modesplit/background.hpp"
#include "modesplit/grid.hpp"

namespace modesplit {

/// Transformed perturbation triple (Uz, P, Phi) at one instant.
struct FieldState {
  Grid1D grid;
  Field Uz;
  Field P;
  Field Phi;
  double t = 0.0;

  /// All-zero state on `grid`.
  static FieldState zeros(const Grid1D& grid, double t = 0.0);
  /// Throws InvalidInput on size mismatch or non-finite samples.
  void validate() const;
};

/// Physical perturbations. phi_prime = p' - gamma (p_bar/rho_bar) rho'.
struct PhysicalState {
  Grid1D grid;
  Field Vz;
  Field p_prime;
  Field phi_prime;
  Field rho_prime;
  double t = 0.0;

  static PhysicalState zeros(const Grid1D& grid, double t = 0.0);
  void validate() const;
};

enum class PulseKind { gaussian, gaussian_derivative };

struct PulseSpec {
  PulseKind kind = PulseKind::gaussian;
  double amplitude = 1.0;
  /// Width in units of H0.
  double beta = 0.3;
  double z0 = 3.0;
};

/// P = p' w, Phi = phi' w, Uz = Vz / w. rho' is not carried over.
FieldState to_transformed(const PhysicalState& phys, const BackgroundProfile& profile);

/// Inverse of to_transformed; rho' = (p' - phi') rho_bar / (gamma p_bar).
PhysicalState to_physical(const FieldState& state, const BackgroundProfile& profile);

/// Gaussian pulse or its z-derivative sampled on `grid`:
///   gaussian:            A exp(-(z-z0)^2 / (beta H0)^2)
///   gaussian_derivative: -2 A exp(-(z-z0)^2 / (beta H0)^2) (z-z0) / (H0 beta^2)
/// Throws InvalidInput for beta <= 0 or H0 <= 0.
Field make_pulse(const PulseSpec& spec, const Grid1D& grid, double H0 = 1.0);

/// sqrt(sum Uz^2 + P^2 + Phi^2); ratios give relative L2 sizes of states.
double l2_norm(const FieldState& state);

}  // namespace modesplit
