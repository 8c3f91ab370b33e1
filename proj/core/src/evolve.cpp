#include "modesplit/evolve.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "modesplit/decompose.hpp"
#include "modesplit/error.hpp"
#include "modesplit/generator.hpp"

namespace modesplit {

namespace {

// Stage buffers for one RK4 step: three fields per stage derivative plus a
// stage state and derivative scratch, all reused.
struct Workspace {
  explicit Workspace(std::size_t n) : k(4, Stage(n)), stage(n), scratch(2 * n) {}

  struct Stage {
    explicit Stage(std::size_t n) : U(n), P(n), Phi(n) {}
    Field U, P, Phi;
  };

  std::vector<Stage> k;
  Stage stage;
  Field scratch;
};

void constrain(Workspace::Stage& s, WallCondition boundary) {
  s.U.front() = 0.0;
  if (boundary == WallCondition::impermeable) {
    s.U.back() = 0.0;
  } else {
    s.P.back() = 0.0;
  }
}

void rk4_step(FieldState& state, const BackgroundProfile& profile, double dt,
              WallCondition boundary, Workspace& ws) {
  const std::size_t n = state.Uz.size();
  auto eval = [&](const Field& U, const Field& P, const Field& Phi, Workspace::Stage& out) {
    apply_generator_into(U, P, Phi, profile, out.U, out.P, out.Phi, ws.scratch);
    constrain(out, boundary);
  };
  auto stage_from = [&](const Workspace::Stage& k, double scale) {
    for (std::size_t i = 0; i < n; ++i) {
      ws.stage.U[i] = state.Uz[i] + scale * k.U[i];
      ws.stage.P[i] = state.P[i] + scale * k.P[i];
      ws.stage.Phi[i] = state.Phi[i] + scale * k.Phi[i];
    }
  };

  eval(state.Uz, state.P, state.Phi, ws.k[0]);
  stage_from(ws.k[0], 0.5 * dt);
  eval(ws.stage.U, ws.stage.P, ws.stage.Phi, ws.k[1]);
  stage_from(ws.k[1], 0.5 * dt);
  eval(ws.stage.U, ws.stage.P, ws.stage.Phi, ws.k[2]);
  stage_from(ws.k[2], dt);
  eval(ws.stage.U, ws.stage.P, ws.stage.Phi, ws.k[3]);

  const double s = dt / 6.0;
  const auto& k = ws.k;
  for (std::size_t i = 0; i < n; ++i) {
    state.Uz[i] += s * (k[0].U[i] + 2.0 * k[1].U[i] + 2.0 * k[2].U[i] + k[3].U[i]);
    state.P[i] += s * (k[0].P[i] + 2.0 * k[1].P[i] + 2.0 * k[2].P[i] + k[3].P[i]);
    state.Phi[i] += s * (k[0].Phi[i] + 2.0 * k[1].Phi[i] + 2.0 * k[2].Phi[i] + k[3].Phi[i]);
  }
  state.t += dt;
}

void check_dt(const BackgroundProfile& profile, double dt, double cfl) {
  const double limit = max_stable_dt(profile, cfl);
  if (!(dt > 0.0) || dt > limit * (1.0 + 1e-12)) {
    std::ostringstream msg;
    msg << "time step " << dt << " outside (0, " << limit << "] for cfl " << cfl;
    throw CflViolation(msg.str());
  }
}

}  // namespace

void validate(const EvolveConfig& config) {
  if (!(config.cfl > 0.0 && config.cfl <= 0.9)) throw InvalidInput("cfl must lie in (0, 0.9]");
  if (!(config.t_end > 0.0) || !std::isfinite(config.t_end)) throw InvalidInput("t_end must be positive");
  if (config.output_every == 0) throw InvalidInput("output_every must be positive");
}

FieldState rhs(const FieldState& state, const BackgroundProfile& profile) {
  return apply_generator(state, profile);
}

double max_stable_dt(const BackgroundProfile& profile, double cfl) {
  double cmax = 0.0;
  const AtmosphereParams& p = profile.params;
  for (double H : profile.H) cmax = std::max(cmax, std::sqrt(p.gamma * p.g * H));
  return cfl * profile.grid.spacing() / cmax;
}

void apply_wall_condition(FieldState& state, WallCondition boundary) {
  state.Uz.front() = 0.0;
  if (boundary == WallCondition::impermeable) {
    state.Uz.back() = 0.0;
  } else {
    state.P.back() = 0.0;
  }
}

FieldState step(const FieldState& state, const BackgroundProfile& profile, double dt,
                WallCondition boundary, double cfl) {
  require_same_grid(state.grid, profile.grid, "step");
  check_dt(profile, dt, cfl);
  Workspace ws(state.grid.size());
  FieldState next = state;
  rk4_step(next, profile, dt, boundary, ws);
  return next;
}

EvolveResult run(const FieldState& initial, const BackgroundProfile& profile,
                 const EvolveConfig& config) {
  validate(config);
  require_same_grid(initial.grid, profile.grid, "run");
  initial.validate();
  require_stable(check_stability(profile));

  EvolveResult result;
  const double dt_max = max_stable_dt(profile, config.cfl);
  result.steps = static_cast<std::size_t>(std::ceil(config.t_end / dt_max));
  result.dt = config.t_end / static_cast<double>(result.steps);

  auto record = [&](const FieldState& s) {
    result.snapshots.push_back(s);
    if (config.decompose_snapshots) {
      result.splits.push_back(decompose(s, profile));
      result.energy_log.push_back(energy_record(s, result.splits.back(), profile));
    } else {
      const EnergyParts parts = energy_parts(s, profile);
      result.energy_log.push_back(
          {s.t, parts.total(), parts.kinetic, parts.baro, parts.thermal, 0.0, 0.0, 0.0});
    }
  };

  check_dt(profile, result.dt, config.cfl);
  Workspace ws(initial.grid.size());
  FieldState state = initial;
  apply_wall_condition(state, config.boundary);
  record(state);
  for (std::size_t k = 1; k <= result.steps; ++k) {
    rk4_step(state, profile, result.dt, config.boundary, ws);
    if (k == result.steps) state.t = initial.t + config.t_end;
    if (k % config.output_every == 0 || k == result.steps) record(state);
  }
  return result;
}

}  // namespace modesplit
