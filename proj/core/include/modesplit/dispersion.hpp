#pragma once

#include <array>

#include "modesplit/background.hpp"

namespace modesplit {

/// The five roots at one wavevector for an isothermal background. The pairs
/// are +/-omega12 (acoustic) and +/-omega34 (buoyancy); both stored values
/// are non-negative.
struct DispersionRoots {
  double omega0 = 0.0;
  double omega12 = 0.0;
  double omega34 = 0.0;
  std::array<double, 3> k{};

  /// Roots in the order omega0, +omega12, -omega12, +omega34, -omega34.
  [[nodiscard]] std::array<double, 5> all() const noexcept {
    return {omega0, omega12, -omega12, omega34, -omega34};
  }
};

/// Throws InvalidInput for a non-isothermal background.
DispersionRoots omega_roots(double kx, double ky, double kz, const AtmosphereParams& params);

/// (K^2 - 4 (gamma-1) k_perp^2 / (gamma^2 H^2)) with K = |k|^2 + 1/(4 H^2);
/// non-negative for every real k when gamma > 1.
double inner_radicand(double kx, double ky, double kz, const AtmosphereParams& params);

/// Squared buoyancy frequency (gamma-1) g / (gamma H) of the isothermal gas.
double buoyancy_frequency_squared(const AtmosphereParams& params);

/// d omega12 / d kz for kx = ky = 0.
double vertical_group_speed(double kz, const AtmosphereParams& params);

}  // namespace modesplit
