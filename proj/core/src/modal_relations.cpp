#include "modesplit/modal_relations.hpp"

#include <cmath>

#include "modesplit/error.hpp"
#include "modesplit/numerics.hpp"

namespace modesplit {

namespace {

void check_size(std::span<const double> f, const BackgroundProfile& profile, const char* what) {
  if (f.size() != profile.grid.size()) {
    throw GridMismatch(std::string(what) + ": field size does not match the profile grid");
  }
}

}  // namespace

Field entropy_phi_from_p(std::span<const double> P0, const BackgroundProfile& profile) {
  check_size(P0, profile, "entropy_phi_from_p");
  const double gamma = profile.params.gamma;
  const double H0 = profile.params.H0;
  const Field dP = numerics::derivative(P0, profile.grid.spacing());
  Field phi(P0.size());
  for (std::size_t i = 0; i < P0.size(); ++i) {
    phi[i] = -0.5 * (gamma - 2.0) * P0[i] + gamma * H0 * profile.eta[i] * dP[i];
  }
  return phi;
}

Field acoustic_p_from_r(std::span<const double> R, const BackgroundProfile& profile) {
  check_size(R, profile, "acoustic_p_from_r");
  const double gamma = profile.params.gamma;
  const double H0 = profile.params.H0;
  const Field dR = numerics::derivative(R, profile.grid.spacing());
  Field P(R.size());
  for (std::size_t i = 0; i < R.size(); ++i) {
    P[i] = (gamma - 2.0) / (2.0 * profile.eta[i]) * R[i] + gamma * H0 * dR[i];
  }
  return P;
}

Field acoustic_p_from_phi(std::span<const double> Phi_a, const BackgroundProfile& profile) {
  check_size(Phi_a, profile, "acoustic_p_from_phi");
  require_stable(check_stability(profile));
  Field R(Phi_a.size());
  for (std::size_t i = 0; i < R.size(); ++i) R[i] = profile.eta[i] / profile.nu[i] * Phi_a[i];
  return acoustic_p_from_r(R, profile);
}

Field acoustic_velocity_highk(std::span<const double> Phi_branch, AcousticBranch branch,
                              const BackgroundProfile& profile) {
  check_size(Phi_branch, profile, "acoustic_velocity_highk");
  const AtmosphereParams& p = profile.params;
  if (!p.isothermal()) {
    throw InvalidInput("high-k acoustic velocity relation holds only for an isothermal background");
  }
  const double c2 = p.gamma * p.g * p.H0;
  double coeff = -p.g * p.gamma * p.gamma / (8.0 * p.rho0 * (p.gamma - 1.0) * c2 * std::sqrt(c2));
  if (branch == AcousticBranch::second) coeff = -coeff;
  Field U = numerics::cumulative_trapezoid(Phi_branch, profile.grid.spacing());
  for (double& u : U) u *= coeff;
  return U;
}

}  // namespace modesplit
