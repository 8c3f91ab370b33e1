#include "modesplit/energetics.hpp"

#include <cmath>

#include "modesplit/generator.hpp"
#include "modesplit/numerics.hpp"

namespace modesplit {

namespace {

struct Weights {
  Field kinetic;
  Field pressure;
  Field entropy;
};

// Change of variables of the physical energy density: rho_bar w^2,
// 1/(gamma p_bar w^2) and 1/(gamma nu p_bar w^2).
Weights transformed_weights(const BackgroundProfile& profile) {
  const std::size_t n = profile.grid.size();
  const double gamma = profile.params.gamma;
  Weights wt{Field(n), Field(n), Field(n)};
  for (std::size_t i = 0; i < n; ++i) {
    const double w2 = profile.w[i] * profile.w[i];
    wt.kinetic[i] = profile.rho_bar[i] * w2;
    wt.pressure[i] = 1.0 / (gamma * profile.p_bar[i] * w2);
    wt.entropy[i] = wt.pressure[i] / profile.nu[i];
  }
  return wt;
}

}  // namespace

double physical_energy(const PhysicalState& phys, const BackgroundProfile& profile) {
  require_same_grid(phys.grid, profile.grid, "physical_energy");
  require_stable(check_stability(profile));
  const double gamma = profile.params.gamma;
  Field density(phys.grid.size());
  for (std::size_t i = 0; i < density.size(); ++i) {
    const double gp = gamma * profile.p_bar[i];
    density[i] = profile.rho_bar[i] * phys.Vz[i] * phys.Vz[i] + phys.p_prime[i] * phys.p_prime[i] / gp +
                 phys.phi_prime[i] * phys.phi_prime[i] / (gp * profile.nu[i]);
  }
  return 0.5 * numerics::integral(density, phys.grid.spacing());
}

double inner_product(const FieldState& a, const FieldState& b, const BackgroundProfile& profile) {
  require_same_grid(a.grid, b.grid, "inner_product");
  require_same_grid(a.grid, profile.grid, "inner_product");
  require_stable(check_stability(profile));
  const Weights wt = transformed_weights(profile);
  Field integrand(a.grid.size());
  for (std::size_t i = 0; i < integrand.size(); ++i) {
    integrand[i] = wt.kinetic[i] * a.Uz[i] * b.Uz[i] + wt.pressure[i] * a.P[i] * b.P[i] +
                   wt.entropy[i] * a.Phi[i] * b.Phi[i];
  }
  return numerics::integral(integrand, a.grid.spacing());
}

double transformed_energy(const FieldState& state, const BackgroundProfile& profile) {
  return 0.5 * inner_product(state, state, profile);
}

EnergyParts energy_parts(const FieldState& state, const BackgroundProfile& profile) {
  require_same_grid(state.grid, profile.grid, "energy_parts");
  require_stable(check_stability(profile));
  const Weights wt = transformed_weights(profile);
  const std::size_t n = state.grid.size();
  Field ek(n), ep(n), et(n);
  for (std::size_t i = 0; i < n; ++i) {
    ek[i] = wt.kinetic[i] * state.Uz[i] * state.Uz[i];
    ep[i] = wt.pressure[i] * state.P[i] * state.P[i];
    et[i] = wt.entropy[i] * state.Phi[i] * state.Phi[i];
  }
  const double dz = state.grid.spacing();
  return {0.5 * numerics::integral(ek, dz), 0.5 * numerics::integral(ep, dz),
          0.5 * numerics::integral(et, dz)};
}

EnergyRecord energy_record(const FieldState& total, const ModeSplit& split,
                           const BackgroundProfile& profile) {
  const EnergyParts parts = energy_parts(total, profile);
  EnergyRecord r{};
  r.t = total.t;
  r.kinetic = parts.kinetic;
  r.baro = parts.baro;
  r.thermal = parts.thermal;
  r.total = parts.total();
  r.acoustic = transformed_energy(split.acoustic, profile);
  r.entropy = transformed_energy(split.entropy, profile);
  r.cross = inner_product(split.acoustic, split.entropy, profile);
  return r;
}

double surface_identity_defect(const FieldState& a, const FieldState& b,
                               const BackgroundProfile& profile) {
  const FieldState la = apply_generator(a, profile);
  const FieldState lb = apply_generator(b, profile);
  return inner_product(la, b, profile) + inner_product(a, lb, profile);
}

double selfadjointness_residual(const FieldState& a, const FieldState& b,
                                const BackgroundProfile& profile) {
  return std::abs(surface_identity_defect(a, b, profile));
}

double boundary_flux(const FieldState& a, const FieldState& b) {
  require_same_grid(a.grid, b.grid, "boundary_flux");
  const std::size_t last = a.grid.size() - 1;
  const double top = a.P[last] * b.Uz[last] + b.P[last] * a.Uz[last];
  const double bottom = a.P[0] * b.Uz[0] + b.P[0] * a.Uz[0];
  return -(top - bottom);
}

}  // namespace modesplit
