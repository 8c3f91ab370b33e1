#pragma once

#include <span>

#include "modesplit/background.hpp"
#include "modesplit/fields.hpp"

namespace modesplit {

/// Time derivative of (Uz, P, Phi) under the linearized 1-D equations:
///   dUz/dt  = ((gamma-2)/(2 gamma H0) - eta d/dz) P / rho0 + Phi / (gamma H0 rho0)
///   dP/dt   = -gamma g H0 rho0 dUz/dz - g rho0 (gamma-2) / (2 eta) Uz
///   dPhi/dt = -(nu/eta) g rho0 Uz
/// No boundary conditions are imposed here. The returned state carries
/// state.t.
FieldState apply_generator(const FieldState& state, const BackgroundProfile& profile);

/// Allocation-free kernel behind apply_generator. `scratch` needs two
/// grid-sized buffers' worth of room (2 n doubles).
void apply_generator_into(std::span<const double> Uz, std::span<const double> P,
                          std::span<const double> Phi, const BackgroundProfile& profile,
                          std::span<double> dUz, std::span<double> dP, std::span<double> dPhi,
                          std::span<double> scratch);

}  // namespace modesplit
