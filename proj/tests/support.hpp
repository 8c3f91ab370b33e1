#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <span>

#include "modesplit/background.hpp"
#include "modesplit/fields.hpp"
#include "modesplit/modal_relations.hpp"
#include "modesplit/numerics.hpp"

namespace testsupport {

using modesplit::BackgroundProfile;
using modesplit::Field;
using modesplit::FieldState;
using modesplit::Grid1D;

inline double gaussian(double z, double z0, double beta) {
  const double x = (z - z0) / beta;
  return std::exp(-x * x);
}

inline double gaussian_d1(double z, double z0, double beta) {
  return -2.0 * (z - z0) / (beta * beta) * gaussian(z, z0, beta);
}

inline double gaussian_d2(double z, double z0, double beta) {
  const double x = z - z0;
  const double b2 = beta * beta;
  return (4.0 * x * x / (b2 * b2) - 2.0 / b2) * gaussian(z, z0, beta);
}

inline modesplit::AtmosphereParams params_for(double alphaH0, double gamma = 1.4) {
  modesplit::AtmosphereParams p;
  p.alphaH0 = alphaH0;
  p.gamma = gamma;
  return p;
}

inline modesplit::PulseSpec pulse(modesplit::PulseKind kind, double beta = 0.3) {
  return {kind, 1.0, beta, 3.0};
}

// Entropy column: P0 pulse, Phi0 from the entropy link, U = 0.
inline FieldState pure_entropy(const BackgroundProfile& prof, modesplit::PulseKind kind,
                               double beta = 0.3) {
  FieldState s = FieldState::zeros(prof.grid);
  s.P = modesplit::make_pulse(pulse(kind, beta), prof.grid);
  s.Phi = modesplit::entropy_phi_from_p(s.P, prof);
  return s;
}

// Acoustic column with U = 0: Phi_a pulse, P_a from the acoustic link.
inline FieldState pure_acoustic(const BackgroundProfile& prof, modesplit::PulseKind kind,
                                double beta = 0.3) {
  FieldState s = FieldState::zeros(prof.grid);
  s.Phi = modesplit::make_pulse(pulse(kind, beta), prof.grid);
  s.P = modesplit::acoustic_p_from_phi(s.Phi, prof);
  return s;
}

inline FieldState difference(const FieldState& a, const FieldState& b) {
  FieldState d = a;
  for (std::size_t i = 0; i < d.Uz.size(); ++i) {
    d.Uz[i] -= b.Uz[i];
    d.P[i] -= b.P[i];
    d.Phi[i] -= b.Phi[i];
  }
  return d;
}

inline double relative_l2(std::span<const double> a, std::span<const double> b) {
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num += (a[i] - b[i]) * (a[i] - b[i]);
    den += b[i] * b[i];
  }
  return std::sqrt(num / den);
}

inline double max_diff(std::span<const double> a, std::span<const double> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline double order(double coarse_err, double fine_err) { return std::log2(coarse_err / fine_err); }

// Random smooth field: a handful of low sine modes with random amplitudes
// and phases, plus an offset.
inline Field smooth_random_field(const Grid1D& grid, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> amp(-1.0, 1.0);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  Field f(grid.size(), amp(rng));
  for (int m = 1; m <= 5; ++m) {
    const double a = amp(rng) / m;
    const double ph = phase(rng);
    const double k = m * std::numbers::pi / grid.height();
    for (std::size_t i = 0; i < f.size(); ++i) f[i] += a * std::sin(k * grid.z(i) + ph);
  }
  return f;
}

}  // namespace testsupport
