#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "modesplit/background.hpp"
#include "modesplit/decompose.hpp"
#include "modesplit/energetics.hpp"
#include "modesplit/error.hpp"
#include "support.hpp"

using namespace modesplit;
using testsupport::params_for;
using testsupport::pure_acoustic;
using testsupport::pure_entropy;

namespace {

FieldState random_state(const Grid1D& grid, std::mt19937_64& rng) {
  FieldState s = FieldState::zeros(grid);
  s.Uz = testsupport::smooth_random_field(grid, rng);
  s.P = testsupport::smooth_random_field(grid, rng);
  s.Phi = testsupport::smooth_random_field(grid, rng);
  return s;
}

FieldState compact_state(const BackgroundProfile& prof, double shift) {
  FieldState s = FieldState::zeros(prof.grid);
  s.Uz = make_pulse({PulseKind::gaussian_derivative, 0.2, 0.3, 3.0 + shift}, prof.grid);
  s.P = make_pulse({PulseKind::gaussian, 1.0, 0.25, 2.8 - shift}, prof.grid);
  s.Phi = make_pulse({PulseKind::gaussian, -0.5, 0.4, 3.1}, prof.grid);
  return s;
}

FieldState mixed_pulse(const BackgroundProfile& prof, PulseKind kind) {
  FieldState total = pure_acoustic(prof, kind);
  const FieldState e = pure_entropy(prof, kind);
  for (std::size_t i = 0; i < total.P.size(); ++i) {
    total.P[i] += e.P[i];
    total.Phi[i] += e.Phi[i];
  }
  return total;
}

}  // namespace

TEST(Energy, ZeroField) {
  const BackgroundProfile prof = build_profile(params_for(0.1), 64);
  EXPECT_EQ(physical_energy(PhysicalState::zeros(prof.grid), prof), 0.0);
  EXPECT_EQ(transformed_energy(FieldState::zeros(prof.grid), prof), 0.0);
}

TEST(Energy, UniformVelocityInNearlyUniformGas) {
  // H0 huge: rho_bar = 1 to 1e-11 on [0, 6], so the kinetic energy is h/2.
  AtmosphereParams p;
  p.H0 = 1e12;
  const BackgroundProfile prof = build_profile(p, 129);
  PhysicalState s = PhysicalState::zeros(prof.grid);
  for (double& v : s.Vz) v = 1.0;
  EXPECT_NEAR(physical_energy(s, prof), 3.0, 1e-10);
}

TEST(Energy, UniformVelocityIsothermal) {
  const BackgroundProfile prof = build_profile(params_for(0.0), 1025);
  PhysicalState s = PhysicalState::zeros(prof.grid);
  for (double& v : s.Vz) v = 1.0;
  EXPECT_NEAR(physical_energy(s, prof), 0.5 * (1.0 - std::exp(-6.0)), 1e-9);
}

TEST(Energy, PhysicalEqualsTransformedOnRandomFields) {
  std::mt19937_64 rng(42);
  for (double a : {-0.1, 0.0, 0.1}) {
    const BackgroundProfile prof = build_profile(params_for(a), 777);
    for (int trial = 0; trial < 5; ++trial) {
      const FieldState s = random_state(prof.grid, rng);
      const double et = transformed_energy(s, prof);
      const double ep = physical_energy(to_physical(s, prof), prof);
      EXPECT_NEAR(ep, et, 1e-10 * et) << a;
    }
  }
}

TEST(Energy, ConstantTemperatureWeights) {
  const BackgroundProfile prof = build_profile(params_for(0.0), 64);
  FieldState s = FieldState::zeros(prof.grid);
  for (double& v : s.P) v = 1.0;
  EXPECT_NEAR(inner_product(s, s, prof), 6.0 / 1.4, 1e-13);
  s = FieldState::zeros(prof.grid);
  for (double& v : s.Phi) v = 1.0;
  EXPECT_NEAR(inner_product(s, s, prof), 6.0 / (1.4 * 0.4), 1e-13);
  s = FieldState::zeros(prof.grid);
  for (double& v : s.Uz) v = 1.0;
  EXPECT_NEAR(inner_product(s, s, prof), 6.0, 1e-13);
}

TEST(Energy, PartsSumToTotal) {
  std::mt19937_64 rng(1);
  const BackgroundProfile prof = build_profile(params_for(-0.1), 200);
  const FieldState s = random_state(prof.grid, rng);
  const EnergyParts parts = energy_parts(s, prof);
  EXPECT_GT(parts.kinetic, 0.0);
  EXPECT_GT(parts.baro, 0.0);
  EXPECT_GT(parts.thermal, 0.0);
  EXPECT_NEAR(parts.total(), transformed_energy(s, prof), 1e-13 * parts.total());
}

TEST(InnerProduct, SymmetricBilinearPositive) {
  std::mt19937_64 rng(9);
  const BackgroundProfile prof = build_profile(params_for(0.1), 300);
  const FieldState a = random_state(prof.grid, rng);
  const FieldState b = random_state(prof.grid, rng);
  const FieldState c = random_state(prof.grid, rng);
  const double ab = inner_product(a, b, prof);
  EXPECT_NEAR(ab, inner_product(b, a, prof), 1e-14 * std::abs(ab));
  EXPECT_EQ(inner_product(a, FieldState::zeros(prof.grid), prof), 0.0);
  FieldState comb = FieldState::zeros(prof.grid);
  for (std::size_t i = 0; i < 300; ++i) {
    comb.Uz[i] = 2.0 * a.Uz[i] - b.Uz[i];
    comb.P[i] = 2.0 * a.P[i] - b.P[i];
    comb.Phi[i] = 2.0 * a.Phi[i] - b.Phi[i];
  }
  const double lhs = inner_product(comb, c, prof);
  const double rhs = 2.0 * inner_product(a, c, prof) - inner_product(b, c, prof);
  EXPECT_NEAR(lhs, rhs, 1e-13 * (std::abs(lhs) + 1.0));
  for (int trial = 0; trial < 10; ++trial) {
    const FieldState x = random_state(prof.grid, rng);
    EXPECT_GT(inner_product(x, x, prof), 0.0);
  }
}

TEST(InnerProduct, GridMismatchAndInstability) {
  const BackgroundProfile prof = build_profile(params_for(0.0), 64);
  EXPECT_THROW(inner_product(FieldState::zeros(prof.grid), FieldState::zeros(Grid1D(64, 5.0)), prof),
               GridMismatch);
  AtmosphereParams p = params_for(-0.3);
  p.h = 3.0;
  const BackgroundProfile bad = build_profile(p, 64);
  EXPECT_THROW(physical_energy(PhysicalState::zeros(bad.grid), bad), UnstableBackground);
  EXPECT_THROW(transformed_energy(FieldState::zeros(bad.grid), bad), UnstableBackground);
}

TEST(Orthogonality, DecomposedModesAreOrthogonal) {
  for (double a : {-0.1, 0.0, 0.1}) {
    const BackgroundProfile prof = build_profile(params_for(a), 4096);
    for (PulseKind kind : {PulseKind::gaussian, PulseKind::gaussian_derivative}) {
      const ModeSplit s = decompose(mixed_pulse(prof, kind), prof);
      const double cross = inner_product(s.acoustic, s.entropy, prof);
      const double norm = std::sqrt(inner_product(s.acoustic, s.acoustic, prof) *
                                    inner_product(s.entropy, s.entropy, prof));
      EXPECT_LT(std::abs(cross) / norm, 1e-6) << a;
    }
  }
}

TEST(Orthogonality, EnergyRecordAdds) {
  const BackgroundProfile prof = build_profile(params_for(0.1), 1024);
  FieldState total = mixed_pulse(prof, PulseKind::gaussian);
  total.t = 0.5;
  const ModeSplit s = decompose(total, prof);
  const EnergyRecord r = energy_record(total, s, prof);
  EXPECT_EQ(r.t, 0.5);
  EXPECT_NEAR(r.total, r.kinetic + r.baro + r.thermal, 1e-13 * r.total);
  EXPECT_NEAR(r.total, r.acoustic + r.entropy + r.cross, 1e-10 * r.total);
  EXPECT_LT(std::abs(r.cross), 1e-6 * r.total);
}

TEST(SurfaceIdentity, ZeroFields) {
  const BackgroundProfile prof = build_profile(params_for(0.0), 64);
  const FieldState z = FieldState::zeros(prof.grid);
  EXPECT_EQ(selfadjointness_residual(z, z, prof), 0.0);
  EXPECT_EQ(boundary_flux(z, z), 0.0);
}

TEST(SurfaceIdentity, CompactFieldsHaveNoSurfaceTerm) {
  for (double a : {-0.1, 0.0, 0.1}) {
    for (std::size_t n : {256, 512, 1024, 2048}) {
      const BackgroundProfile prof = build_profile(params_for(a), n);
      const FieldState x = compact_state(prof, 0.2);
      const FieldState y = compact_state(prof, -0.3);
      const double scale = std::sqrt(inner_product(x, x, prof) * inner_product(y, y, prof));
      EXPECT_LT(selfadjointness_residual(x, y, prof), 1e-12 * scale) << a << " n=" << n;
    }
  }
}

TEST(SurfaceIdentity, OpenFieldsMatchBoundaryFlux) {
  std::mt19937_64 rng(77);
  for (double a : {-0.1, 0.0, 0.1}) {
    for (std::size_t n : {256, 1024}) {
      const BackgroundProfile prof = build_profile(params_for(a), n);
      const FieldState x = random_state(prof.grid, rng);
      const FieldState y = random_state(prof.grid, rng);
      const double flux = boundary_flux(x, y);
      ASSERT_GT(std::abs(flux), 1e-3);
      EXPECT_NEAR(surface_identity_defect(x, y, prof), flux, 1e-10 * std::abs(flux)) << a;
    }
  }
}

TEST(SurfaceIdentity, FluxFormula) {
  const Grid1D g(16, 1.0);
  FieldState a = FieldState::zeros(g);
  FieldState b = FieldState::zeros(g);
  a.P.back() = 2.0;
  b.Uz.back() = 3.0;
  a.P.front() = 5.0;
  b.Uz.front() = 7.0;
  EXPECT_DOUBLE_EQ(boundary_flux(a, b), -(6.0 - 35.0));
}
