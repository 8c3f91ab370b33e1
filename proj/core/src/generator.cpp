#include "modesplit/generator.hpp"

#include "modesplit/error.hpp"
#include "modesplit/numerics.hpp"

namespace modesplit {

void apply_generator_into(std::span<const double> Uz, std::span<const double> P,
                          std::span<const double> Phi, const BackgroundProfile& profile,
                          std::span<double> dUz, std::span<double> dP, std::span<double> dPhi,
                          std::span<double> scratch) {
  const std::size_t n = profile.grid.size();
  if (Uz.size() != n || P.size() != n || Phi.size() != n || dUz.size() != n || dP.size() != n ||
      dPhi.size() != n || scratch.size() < 2 * n) {
    throw GridMismatch("apply_generator: buffer sizes do not match the profile grid");
  }
  const AtmosphereParams& p = profile.params;
  const double dz = profile.grid.spacing();
  const std::span<double> P_z = scratch.subspan(0, n);
  const std::span<double> U_z = scratch.subspan(n, n);
  numerics::derivative_into(P, dz, P_z);
  numerics::derivative_into(Uz, dz, U_z);

  const double c_u = (p.gamma - 2.0) / (2.0 * p.gamma * p.H0);
  const double c_phi = 1.0 / (p.gamma * p.H0 * p.rho0);
  const double c_p = p.gamma * p.g * p.H0 * p.rho0;
  const double inv_rho0 = 1.0 / p.rho0;
  const double c_pu = p.g * p.rho0 * (p.gamma - 2.0) / 2.0;
  const double c_phiu = p.g * p.rho0;
  for (std::size_t i = 0; i < n; ++i) {
    const double eta = profile.eta[i];
    const double inv_eta = 1.0 / eta;
    dUz[i] = (c_u * P[i] - eta * P_z[i]) * inv_rho0 + c_phi * Phi[i];
    dP[i] = -c_p * U_z[i] - c_pu * inv_eta * Uz[i];
    dPhi[i] = -profile.nu[i] * inv_eta * c_phiu * Uz[i];
  }
}

FieldState apply_generator(const FieldState& state, const BackgroundProfile& profile) {
  require_same_grid(state.grid, profile.grid, "apply_generator");
  FieldState out = FieldState::zeros(state.grid, state.t);
  Field scratch(2 * state.grid.size());
  apply_generator_into(state.Uz, state.P, state.Phi, profile, out.Uz, out.P, out.Phi, scratch);
  return out;
}

}  // namespace modesplit
