#include "modesplit/dispersion.hpp"

#include <algorithm>
#include <cmath>

#include "modesplit/error.hpp"

namespace modesplit {

namespace {

struct RadicalTerms {
  double big_k;      // |k|^2 + 1/(4H^2)
  double buoyancy;   // 4 (gamma-1) k_perp^2 / (gamma^2 H^2)
};

RadicalTerms radical_terms(double kx, double ky, double kz, const AtmosphereParams& p) {
  const double H = p.H0;
  const double kperp2 = kx * kx + ky * ky;
  return {kperp2 + kz * kz + 1.0 / (4.0 * H * H),
          4.0 * (p.gamma - 1.0) * kperp2 / (p.gamma * p.gamma * H * H)};
}

}  // namespace

double inner_radicand(double kx, double ky, double kz, const AtmosphereParams& params) {
  const RadicalTerms t = radical_terms(kx, ky, kz, params);
  return t.big_k * t.big_k - t.buoyancy;
}

DispersionRoots omega_roots(double kx, double ky, double kz, const AtmosphereParams& params) {
  validate(params);
  if (!params.isothermal()) {
    throw InvalidInput("closed-form dispersion roots exist only for an isothermal background");
  }
  const RadicalTerms t = radical_terms(kx, ky, kz, params);
  const double root = std::sqrt(std::max(0.0, t.big_k * t.big_k - t.buoyancy));
  const double scale = 0.5 * params.gamma * params.g * params.H0;
  const double plus = t.big_k + root;
  // K - sqrt(K^2 - X) = X / (K + sqrt(K^2 - X)), free of cancellation.
  const double minus = t.buoyancy / plus;

  DispersionRoots r;
  r.k = {kx, ky, kz};
  r.omega12 = std::sqrt(scale * plus);
  r.omega34 = std::sqrt(scale * minus);
  return r;
}

double buoyancy_frequency_squared(const AtmosphereParams& params) {
  return (params.gamma - 1.0) * params.g / (params.gamma * params.H0);
}

double vertical_group_speed(double kz, const AtmosphereParams& params) {
  const DispersionRoots r = omega_roots(0.0, 0.0, kz, params);
  if (r.omega12 == 0.0) return 0.0;
  // omega^2 = gamma g H (kz^2 + 1/(4H^2))
  return params.gamma * params.g * params.H0 * kz / r.omega12;
}

}  // namespace modesplit
