#pragma once

#include <cstddef>
#include <vector>

#include "modesplit/background.hpp"
#include "modesplit/decompose.hpp"
#include "modesplit/energetics.hpp"
#include "modesplit/fields.hpp"

namespace modesplit {

enum class WallCondition {
  /// Uz = 0 at z = 0 and z = h.
  impermeable,
  /// Uz = 0 at z = 0, P = 0 at z = h.
  pressure_release_top,
};

struct EvolveConfig {
  double cfl = 0.4;
  double t_end = 10.0;
  /// Snapshot cadence in steps; the initial and final states are always kept.
  std::size_t output_every = 100;
  WallCondition boundary = WallCondition::impermeable;
  /// Decompose each snapshot to fill the acoustic/entropy columns of the log.
  bool decompose_snapshots = true;
};

/// Throws InvalidInput unless 0 < cfl <= 0.9, t_end > 0 and output_every > 0.
void validate(const EvolveConfig& config);

/// Generator applied to `state` (alias of apply_generator).
FieldState rhs(const FieldState& state, const BackgroundProfile& profile);

/// Largest step allowed: cfl dz / max_z sqrt(gamma g H(z)).
double max_stable_dt(const BackgroundProfile& profile, double cfl);

/// One classical four-stage Runge-Kutta step with the wall condition imposed
/// at every stage. Throws CflViolation if dt exceeds max_stable_dt(profile, cfl).
FieldState step(const FieldState& state, const BackgroundProfile& profile, double dt,
                WallCondition boundary = WallCondition::impermeable, double cfl = 0.9);

/// Sets the constrained boundary samples of `state` to zero.
void apply_wall_condition(FieldState& state, WallCondition boundary);

struct EvolveResult {
  std::vector<FieldState> snapshots;
  std::vector<EnergyRecord> energy_log;
  /// One per snapshot when config.decompose_snapshots is set.
  std::vector<ModeSplit> splits;
  double dt = 0.0;
  std::size_t steps = 0;
};

/// Integrates to t_end with a uniform step chosen from the CFL factor.
EvolveResult run(const FieldState& initial, const BackgroundProfile& profile,
                 const EvolveConfig& config);

}  // namespace modesplit
