#include "modesplit/background.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "modesplit/error.hpp"

namespace modesplit {

bool AtmosphereParams::isothermal() const noexcept {
  return std::abs(alphaH0) < kIsothermalThreshold;
}

double AtmosphereParams::eta(double z) const noexcept { return 1.0 + alphaH0 * z / H0; }

double AtmosphereParams::inverse_scale_height_integral(double z) const noexcept {
  if (isothermal()) return z / H0;
  // (1/(alpha H0)) ln(1 + alpha z), alpha = alphaH0 / H0
  return std::log1p(alphaH0 * z / H0) / alphaH0;
}

double AtmosphereParams::sound_speed(double z) const noexcept {
  return std::sqrt(gamma * g * scale_height(z));
}

void validate(const AtmosphereParams& p) {
  for (double v : {p.gamma, p.g, p.H0, p.alphaH0, p.h, p.rho0}) {
    if (!std::isfinite(v)) throw InvalidInput("atmosphere parameters must be finite");
  }
  if (p.gamma <= 1.0) throw InvalidInput("gamma must exceed 1");
  if (p.g <= 0.0) throw InvalidInput("g must be positive");
  if (p.H0 <= 0.0) throw InvalidInput("H0 must be positive");
  if (p.h <= 0.0) throw InvalidInput("domain height h must be positive");
  if (p.rho0 <= 0.0) throw InvalidInput("rho0 must be positive");
  // eta is linear, so its extremes sit at the ends.
  if (p.eta(0.0) <= 0.0 || p.eta(p.h) <= 0.0) {
    std::ostringstream msg;
    msg << "scale height not positive on [0, h]: eta(h) = " << p.eta(p.h);
    throw InvalidInput(msg.str());
  }
}

BackgroundProfile build_profile(const AtmosphereParams& params, std::size_t n) {
  validate(params);
  Grid1D grid(n, params.h);
  BackgroundProfile prof{params, grid, {}, {}, {}, {}, {}, {}};
  prof.H.resize(n);
  prof.eta.resize(n);
  prof.nu.resize(n);
  prof.rho_bar.resize(n);
  prof.p_bar.resize(n);
  prof.w.resize(n);

  const double dHdz = params.alphaH0;
  for (std::size_t i = 0; i < n; ++i) {
    const double z = grid.z(i);
    const double eta = params.eta(z);
    const double integral = params.inverse_scale_height_integral(z);
    prof.eta[i] = eta;
    prof.H[i] = params.H0 * eta;
    prof.nu[i] = params.gamma - 1.0 + params.gamma * dHdz;
    prof.rho_bar[i] = params.rho0 / eta * std::exp(-integral);
    prof.p_bar[i] = prof.rho_bar[i] * params.g * prof.H[i];
    prof.w[i] = std::exp(0.5 * integral);
  }
  return prof;
}

namespace {

StabilityReport scan(const Field& z, const Field& nu) {
  StabilityReport r{std::numeric_limits<double>::infinity(), 0.0, true};
  for (std::size_t i = 0; i < nu.size(); ++i) {
    if (nu[i] < r.min_nu) {
      r.min_nu = nu[i];
      r.z_at_min = z[i];
    }
    if (!(nu[i] > 0.0)) r.stable = false;
  }
  return r;
}

}  // namespace

StabilityReport check_stability(const BackgroundProfile& profile) {
  return scan(profile.grid.positions(), profile.nu);
}

StabilityReport check_stability(const AtmosphereParams& params, std::size_t n) {
  for (double v : {params.gamma, params.H0, params.alphaH0, params.h}) {
    if (!std::isfinite(v)) throw InvalidInput("atmosphere parameters must be finite");
  }
  if (params.h <= 0.0) throw InvalidInput("domain height h must be positive");
  Grid1D grid(n, params.h);
  Field nu(n, params.nu());
  return scan(grid.positions(), nu);
}

void require_stable(const StabilityReport& report) {
  if (report.stable) return;
  std::ostringstream msg;
  msg << "static stability violated: nu_min=" << report.min_nu << " z=" << report.z_at_min;
  throw UnstableBackground(report.min_nu, report.z_at_min, msg.str());
}

double nonideal_xi(double A, double B, double g, double H) {
  const double denom = g * H - B;
  if (denom == 0.0) throw SingularParameter("nonideal_xi: g H equals B");
  return -(A * g * H + B) / (2.0 * H * denom);
}

}  // namespace modesplit
