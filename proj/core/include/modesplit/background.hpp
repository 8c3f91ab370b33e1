#pragma once

#include <cstddef>

#include "modesplit/grid.hpp"

namespace modesplit {

/// Physical constants and the linear scale-height law
/// H(z) = H0 * (1 + alphaH0 * z / H0).
///
/// Internal units are H0 = g = rho0 = 1 by default; the fields are kept so
/// the formulas stay dimensionally honest and can be rescaled.
struct AtmosphereParams {
  double gamma = 1.4;
  double g = 1.0;
  double H0 = 1.0;
  double alphaH0 = 0.0;
  double h = 6.0;
  double rho0 = 1.0;

  /// |alphaH0| below this selects the isothermal (alpha = 0) closed forms.
  static constexpr double kIsothermalThreshold = 1e-12;

  [[nodiscard]] bool isothermal() const noexcept;
  /// eta(z) = H(z)/H0.
  [[nodiscard]] double eta(double z) const noexcept;
  [[nodiscard]] double scale_height(double z) const noexcept { return H0 * eta(z); }
  /// nu = gamma - 1 + gamma dH/dz, constant for the linear law.
  [[nodiscard]] double nu() const noexcept { return gamma - 1.0 + gamma * alphaH0; }
  /// Integral of dz'/H(z') from 0 to z, closed form.
  [[nodiscard]] double inverse_scale_height_integral(double z) const noexcept;
  /// Adiabatic sound speed sqrt(gamma g H(z)).
  [[nodiscard]] double sound_speed(double z) const noexcept;
};

/// Throws InvalidInput if any field is non-finite, gamma <= 1, g, H0, h or
/// rho0 are non-positive, or eta(z) <= 0 somewhere on [0, h].
void validate(const AtmosphereParams& params);

/// Grid-sampled equilibrium state. Immutable once built.
struct BackgroundProfile {
  AtmosphereParams params;
  Grid1D grid;
  Field H;
  Field eta;
  Field nu;
  Field rho_bar;
  Field p_bar;
  /// Transform weight exp(int_0^z dz'/2H).
  Field w;
};

BackgroundProfile build_profile(const AtmosphereParams& params, std::size_t n);

struct StabilityReport {
  double min_nu;
  double z_at_min;
  bool stable;
};

/// Passes iff nu > 0 at every sample of the profile.
StabilityReport check_stability(const BackgroundProfile& profile);

/// Same criterion evaluated straight from the parameters on n samples of
/// [0, h]. Needs only finite parameters, so an unstable set can be reported
/// even when the profile itself cannot be built.
StabilityReport check_stability(const AtmosphereParams& params, std::size_t n = 1025);

/// Throws UnstableBackground unless the report passes.
void require_stable(const StabilityReport& report);

/// Exponent xi of the exp(xi z) correction to the transformed variables for a
/// non-ideal fluid with internal-energy coefficients A (dimensionless) and
/// B (length^2/time^2). Throws SingularParameter when g H == B.
double nonideal_xi(double A, double B, double g, double H);

}  // namespace modesplit
