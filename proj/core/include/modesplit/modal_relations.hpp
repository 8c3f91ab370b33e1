#pragma once

#include <span>

#include "modesplit/background.hpp"

namespace modesplit {

/// Entropy-mode link: Phi0 = (-(gamma-2)/2 + gamma H0 eta d/dz) P0.
Field entropy_phi_from_p(std::span<const double> P0, const BackgroundProfile& profile);

/// Acoustic link: P_a = ((gamma-2)/(2 eta) + gamma H0 d/dz) [(eta/nu) Phi_a].
/// The bracket acts on (eta/nu) Phi_a. Throws UnstableBackground if nu <= 0.
Field acoustic_p_from_phi(std::span<const double> Phi_a, const BackgroundProfile& profile);

/// Same operator applied directly to R = (eta/nu) Phi_a.
Field acoustic_p_from_r(std::span<const double> R, const BackgroundProfile& profile);

enum class AcousticBranch { first = 1, second = 2 };

/// High-wavenumber velocity of one acoustic branch over an isothermal
/// background:
///   U_{1,z} = -g gamma^2 / (8 rho0 (gamma-1) (gamma g H0)^{3/2}) int_0^z Phi_1 dz'
/// and the opposite sign for the second branch. Only meaningful for
/// k_z H0 >> 1. Throws InvalidInput when the background is not isothermal.
Field acoustic_velocity_highk(std::span<const double> Phi_branch, AcousticBranch branch,
                              const BackgroundProfile& profile);

}  // namespace modesplit
