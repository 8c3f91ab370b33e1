#pragma once

#include "modesplit/background.hpp"
#include "modesplit/decompose.hpp"
#include "modesplit/fields.hpp"

namespace modesplit {

/// 0.5 int (rho_bar V^2 + p'^2/(gamma p_bar) + phi'^2/(gamma nu p_bar)) dz,
/// per unit horizontal area. Throws UnstableBackground when nu <= 0.
double physical_energy(const PhysicalState& phys, const BackgroundProfile& profile);

/// Energy inner product of transformed states:
///   int (rho_bar w^2 Ua Ub + Pa Pb / (gamma p_bar w^2) + Phia Phib / (gamma nu p_bar w^2)) dz
/// rho_bar w^2 = rho0/eta and p_bar w^2 = g H0 rho0, so the weights are the
/// change of variables of physical_energy and reduce to the constant-T ones
/// at alphaH0 = 0.
double inner_product(const FieldState& a, const FieldState& b, const BackgroundProfile& profile);

/// 0.5 <s, s>.
double transformed_energy(const FieldState& state, const BackgroundProfile& profile);

struct EnergyParts {
  double kinetic;
  double baro;
  double thermal;
  [[nodiscard]] double total() const noexcept { return kinetic + baro + thermal; }
};
EnergyParts energy_parts(const FieldState& state, const BackgroundProfile& profile);

/// One row of the energy log. total == acoustic + entropy + cross, with
/// cross = <acoustic, entropy>.
struct EnergyRecord {
  double t;
  double total;
  double kinetic;
  double baro;
  double thermal;
  double acoustic;
  double entropy;
  double cross;
};
EnergyRecord energy_record(const FieldState& total, const ModeSplit& split,
                           const BackgroundProfile& profile);

/// <L a, b> + <a, L b>, with L the 1-D generator. For exact derivatives this
/// equals boundary_flux(a, b); it vanishes for impermeable fields.
double surface_identity_defect(const FieldState& a, const FieldState& b,
                               const BackgroundProfile& profile);

/// |surface_identity_defect(a, b)|.
double selfadjointness_residual(const FieldState& a, const FieldState& b,
                                const BackgroundProfile& profile);

/// -[P_a U_b + P_b U_a] evaluated between z = 0 and z = h.
double boundary_flux(const FieldState& a, const FieldState& b);

}  // namespace modesplit
