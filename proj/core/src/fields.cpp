#include "modesplit/fields.hpp"

#include <cmath>

#include "modesplit/error.hpp"
#include "modesplit/numerics.hpp"

namespace modesplit {

namespace {

void check_field(const Field& f, std::size_t n, const char* name) {
  if (f.size() != n) {
    throw InvalidInput(std::string(name) + ": expected " + std::to_string(n) + " samples, got " +
                       std::to_string(f.size()));
  }
  for (double v : f) {
    if (!std::isfinite(v)) throw InvalidInput(std::string(name) + ": non-finite sample");
  }
}

}  // namespace

FieldState FieldState::zeros(const Grid1D& grid, double t) {
  const std::size_t n = grid.size();
  return FieldState{grid, Field(n, 0.0), Field(n, 0.0), Field(n, 0.0), t};
}

void FieldState::validate() const {
  const std::size_t n = grid.size();
  check_field(Uz, n, "Uz");
  check_field(P, n, "P");
  check_field(Phi, n, "Phi");
}

PhysicalState PhysicalState::zeros(const Grid1D& grid, double t) {
  const std::size_t n = grid.size();
  return PhysicalState{grid, Field(n, 0.0), Field(n, 0.0), Field(n, 0.0), Field(n, 0.0), t};
}

void PhysicalState::validate() const {
  const std::size_t n = grid.size();
  check_field(Vz, n, "Vz");
  check_field(p_prime, n, "p_prime");
  check_field(phi_prime, n, "phi_prime");
  check_field(rho_prime, n, "rho_prime");
}

FieldState to_transformed(const PhysicalState& phys, const BackgroundProfile& profile) {
  require_same_grid(phys.grid, profile.grid, "to_transformed");
  phys.validate();
  const std::size_t n = phys.grid.size();
  FieldState s = FieldState::zeros(phys.grid, phys.t);
  for (std::size_t i = 0; i < n; ++i) {
    const double w = profile.w[i];
    s.Uz[i] = phys.Vz[i] / w;
    s.P[i] = phys.p_prime[i] * w;
    s.Phi[i] = phys.phi_prime[i] * w;
  }
  return s;
}

PhysicalState to_physical(const FieldState& state, const BackgroundProfile& profile) {
  require_same_grid(state.grid, profile.grid, "to_physical");
  state.validate();
  const std::size_t n = state.grid.size();
  const double gamma = profile.params.gamma;
  PhysicalState p = PhysicalState::zeros(state.grid, state.t);
  for (std::size_t i = 0; i < n; ++i) {
    const double w = profile.w[i];
    p.Vz[i] = state.Uz[i] * w;
    p.p_prime[i] = state.P[i] / w;
    p.phi_prime[i] = state.Phi[i] / w;
    p.rho_prime[i] = (p.p_prime[i] - p.phi_prime[i]) * profile.rho_bar[i] / (gamma * profile.p_bar[i]);
  }
  return p;
}

Field make_pulse(const PulseSpec& spec, const Grid1D& grid, double H0) {
  if (!(spec.beta > 0.0) || !std::isfinite(spec.beta)) throw InvalidInput("pulse width beta must be positive");
  if (!(H0 > 0.0)) throw InvalidInput("H0 must be positive");
  const double width2 = spec.beta * spec.beta * H0 * H0;
  Field f(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = grid.z(i) - spec.z0;
    const double g = std::exp(-x * x / width2);
    f[i] = spec.kind == PulseKind::gaussian
               ? spec.amplitude * g
               : -2.0 * spec.amplitude * g * x / (H0 * spec.beta * spec.beta);
  }
  return f;
}

double l2_norm(const FieldState& state) {
  const double u = numerics::l2_norm(state.Uz);
  const double p = numerics::l2_norm(state.P);
  const double f = numerics::l2_norm(state.Phi);
  return std::sqrt(u * u + p * p + f * f);
}

}  // namespace modesplit
