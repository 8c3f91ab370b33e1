#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "modesplit/background.hpp"
#include "modesplit/decompose.hpp"
#include "modesplit/error.hpp"
#include "modesplit/modal_relations.hpp"
#include "modesplit/numerics.hpp"
#include "support.hpp"

using namespace modesplit;
using testsupport::order;
using testsupport::params_for;
using testsupport::pure_acoustic;
using testsupport::pure_entropy;

namespace {

double l2_residual(const Field& r, double dz) {
  double s = 0.0;
  for (double v : r) s += v * v;
  return std::sqrt(s * dz);
}

const PulseKind kKinds[] = {PulseKind::gaussian, PulseKind::gaussian_derivative};

}  // namespace

TEST(Homogeneous, ValuesAtZero) {
  for (double a : {-0.1, 0.0, 0.1, 0.5}) {
    const HomogeneousPair hp = homogeneous_solutions(build_profile(params_for(a), 64));
    EXPECT_DOUBLE_EQ(hp.R1[0], 1.0);
    EXPECT_EQ(hp.R2[0], 0.0);
  }
}

TEST(Homogeneous, IsothermalClosedForm) {
  const BackgroundProfile prof = build_profile(params_for(0.0), 601);  // z = 2 at 200
  const HomogeneousPair hp = homogeneous_solutions(prof);
  EXPECT_NEAR(hp.R1[200], 0.36787944117144233, 1e-15);
  EXPECT_NEAR(hp.R2[200], 2.3504023872876028, 1e-14);
}

TEST(Homogeneous, LinearLawClosedForm) {
  const BackgroundProfile prof = build_profile(params_for(0.1), 601);  // z = 3 at 300
  const HomogeneousPair hp = homogeneous_solutions(prof);
  EXPECT_NEAR(hp.R1[300], 0.26932907434290439, 1e-15);
  // R1 int_0^3 dz/R1^2 evaluated independently by high-precision quadrature
  EXPECT_NEAR(hp.R2[300], 4.143163568779178, 1e-13);
}

TEST(Homogeneous, SecondSolutionFromFirstByQuadrature) {
  // R2 = R1 int_0^z dz' / R1^2 with a fourth-order cumulative rule.
  for (double a : {-0.1, 0.0, 0.1}) {
    const BackgroundProfile prof = build_profile(params_for(a), 2049);
    const HomogeneousPair hp = homogeneous_solutions(prof);
    Field inv(hp.R1.size());
    for (std::size_t i = 0; i < inv.size(); ++i) inv[i] = 1.0 / (hp.R1[i] * hp.R1[i]);
    const Field cum = numerics::cumulative_cubic(inv, prof.grid.spacing());
    for (std::size_t i = 0; i < inv.size(); i += 16) {
      EXPECT_NEAR(hp.R2[i], hp.R1[i] * cum[i], 1e-10 * (1.0 + std::abs(hp.R2[i]))) << a;
    }
  }
}

TEST(Homogeneous, UnitWronskian) {
  for (double a : {-0.1, 0.0, 0.1}) {
    const BackgroundProfile prof = build_profile(params_for(a), 2048);
    const HomogeneousPair hp = homogeneous_solutions(prof);
    const Field d1 = numerics::derivative(hp.R1, prof.grid.spacing());
    const Field d2 = numerics::derivative(hp.R2, prof.grid.spacing());
    for (std::size_t i = 4; i + 4 < 2048; i += 10) {
      EXPECT_NEAR(hp.R1[i] * d2[i] - d1[i] * hp.R2[i], 1.0, 1e-9) << a;
    }
  }
}

TEST(Homogeneous, SingularAtMinusOne) {
  AtmosphereParams p = params_for(-1.0);
  p.h = 0.5;
  const BackgroundProfile prof = build_profile(p, 32);
  EXPECT_THROW(homogeneous_solutions(prof), SingularParameter);
}

TEST(Homogeneous, AnnihilatedBySecondOrderOperator) {
  for (double a : {-0.1, 0.0, 0.1}) {
    double prev1 = 0.0;
    double prev2 = 0.0;
    for (std::size_t n : {512, 1024, 2048, 4096}) {
      const BackgroundProfile prof = build_profile(params_for(a), n);
      const HomogeneousPair hp = homogeneous_solutions(prof);
      const Field zero(n, 0.0);
      const double dz = prof.grid.spacing();
      const double r1 =
          l2_residual(r_operator_residual(hp.R1, zero, prof, BvpScheme::three_point), dz);
      const double r2 =
          l2_residual(r_operator_residual(hp.R2, zero, prof, BvpScheme::three_point), dz);
      if (prev1 > 0.0) {
        EXPECT_GT(order(prev1, r1), 1.9) << a << " n=" << n;
        EXPECT_GT(order(prev2, r2), 1.9) << a << " n=" << n;
      }
      prev1 = r1;
      prev2 = r2;
    }
  }
}

TEST(RhsD, ZeroAndConstantEntropy) {
  const BackgroundProfile prof = build_profile(params_for(0.0), 64);
  const Field zero(64, 0.0);
  for (double v : rhs_D(zero, zero, prof)) EXPECT_EQ(v, 0.0);
  const Field c(64, 0.7);
  for (double v : rhs_D(zero, c, prof)) EXPECT_NEAR(v, -0.7 / (1.4 * 1.4), 1e-15);
}

TEST(RhsD, GaussianPressureWithGammaTwo) {
  // gamma = 2, eta = 1: D = -(-4 P') / 8 = P' / 2
  const BackgroundProfile prof = build_profile(params_for(0.0, 2.0), 4096);
  const Field P = make_pulse(testsupport::pulse(PulseKind::gaussian), prof.grid);
  const Field D = rhs_D(P, Field(4096, 0.0), prof);
  for (std::size_t i = 0; i < 4096; ++i) {
    ASSERT_NEAR(D[i], 0.5 * testsupport::gaussian_d1(prof.grid.z(i), 3.0, 0.3), 2e-9);
  }
}

TEST(RhsD, SizeMismatch) {
  const BackgroundProfile prof = build_profile(params_for(0.0), 64);
  EXPECT_THROW(rhs_D(Field(63, 0.0), Field(64, 0.0), prof), GridMismatch);
}

TEST(Quadrature, TrivialCases) {
  const BackgroundProfile prof = build_profile(params_for(0.1), 128);
  const Field zero(128, 0.0);
  for (double v : solve_R_quadrature(zero, prof, 0.0, 0.0)) EXPECT_EQ(v, 0.0);
  const HomogeneousPair hp = homogeneous_solutions(prof);
  const Field r = solve_R_quadrature(zero, prof, 1.0, 0.0);
  for (std::size_t i = 0; i < 128; ++i) EXPECT_EQ(r[i], hp.R1[i]);
}

TEST(Quadrature, ResidualShrinksUnderRefinement) {
  for (QuadratureRule rule : {QuadratureRule::trapezoid, QuadratureRule::cubic}) {
    double prev = 0.0;
    for (std::size_t n : {256, 512, 1024, 2048}) {
      const BackgroundProfile prof = build_profile(params_for(0.1), n);
      const FieldState s = pure_acoustic(prof, PulseKind::gaussian);
      const Field D = rhs_D(s.P, s.Phi, prof);
      const Field R = solve_R_quadrature(D, prof, 0.2, -0.1, rule);
      const double res = l2_residual(r_operator_residual(R, D, prof, BvpScheme::three_point),
                                     prof.grid.spacing());
      if (prev > 0.0) EXPECT_GT(order(prev, res), 1.9) << static_cast<int>(rule) << " " << n;
      prev = res;
    }
  }
}

TEST(Quadrature, FittedConstantsHitBoundaryValues) {
  const BackgroundProfile prof = build_profile(params_for(-0.1), 512);
  const FieldState s = pure_entropy(prof, PulseKind::gaussian_derivative);
  const Field D = rhs_D(s.P, s.Phi, prof);
  const QuadratureConstants c = fit_quadrature_constants(D, prof, 0.3, -0.8);
  const Field R = solve_R_quadrature(D, prof, c.C1, c.C2);
  EXPECT_NEAR(R.front(), 0.3, 1e-14);
  EXPECT_NEAR(R.back(), -0.8, 1e-12);
}

TEST(Bvp, ZeroSourceGivesZero) {
  const BackgroundProfile prof = build_profile(params_for(0.0), 128);
  for (double v : solve_R_bvp(Field(128, 0.0), prof)) EXPECT_EQ(v, 0.0);
}

TEST(Bvp, MatchValuesAreImposed) {
  const BackgroundProfile prof = build_profile(params_for(0.1), 256);
  const HomogeneousPair hp = homogeneous_solutions(prof);
  // R1 + R2 solves the homogeneous equation; matching its end values recovers it.
  Field target(256);
  for (std::size_t i = 0; i < 256; ++i) target[i] = hp.R1[i] + hp.R2[i];
  for (BvpScheme scheme : {BvpScheme::three_point, BvpScheme::numerov}) {
    const Field R =
        solve_R_bvp(Field(256, 0.0), prof, MatchValues{target.front(), target.back()}, scheme);
    EXPECT_EQ(R.front(), target.front());
    EXPECT_EQ(R.back(), target.back());
    EXPECT_LT(testsupport::max_diff(R, target), scheme == BvpScheme::numerov ? 1e-8 : 1e-3);
  }
}

TEST(Bvp, RecoversConstructingFieldAtSchemeOrder) {
  for (BvpScheme scheme : {BvpScheme::three_point, BvpScheme::numerov}) {
    for (double a : {-0.1, 0.0, 0.1}) {
      double prev = 0.0;
      for (std::size_t n : {256, 512, 1024}) {
        const BackgroundProfile prof = build_profile(params_for(a), n);
        const FieldState s = pure_acoustic(prof, PulseKind::gaussian);
        Field R_exact(n);
        for (std::size_t i = 0; i < n; ++i) R_exact[i] = prof.eta[i] / prof.nu[i] * s.Phi[i];
        const Field R = solve_R_bvp(rhs_D(s.P, s.Phi, prof), prof, DirichletZero{}, scheme);
        const double err = testsupport::max_diff(R, R_exact);
        if (prev > 0.0) {
          EXPECT_GT(order(prev, err), scheme == BvpScheme::numerov ? 3.5 : 1.9) << a << " " << n;
        }
        prev = err;
      }
    }
  }
}

TEST(Bvp, AgreesWithFittedQuadrature) {
  for (double a : {-0.1, 0.0, 0.1}) {
    const BackgroundProfile prof = build_profile(params_for(a), 1024);
    const FieldState s = pure_entropy(prof, PulseKind::gaussian);
    FieldState mixed = pure_acoustic(prof, PulseKind::gaussian_derivative);
    for (std::size_t i = 0; i < 1024; ++i) {
      mixed.P[i] += s.P[i];
      mixed.Phi[i] += s.Phi[i];
    }
    const Field D = rhs_D(mixed.P, mixed.Phi, prof);
    const Field Rb = solve_R_bvp(D, prof);
    const QuadratureConstants c = fit_quadrature_constants(D, prof, Rb.front(), Rb.back());
    const Field Rq = solve_R_quadrature(D, prof, c.C1, c.C2);
    EXPECT_LT(testsupport::max_diff(Rb, Rq) / numerics::max_abs(Rb), 1e-6) << a;
  }
}

TEST(Decompose, ZeroTotal) {
  const BackgroundProfile prof = build_profile(params_for(0.1), 128);
  const ModeSplit s = decompose(FieldState::zeros(prof.grid, 2.0), prof);
  EXPECT_EQ(l2_norm(s.acoustic), 0.0);
  EXPECT_EQ(l2_norm(s.entropy), 0.0);
  EXPECT_EQ(s.acoustic.t, 2.0);
  EXPECT_EQ(s.entropy.t, 2.0);
}

TEST(Decompose, PureModesAreReturnedIntact) {
  for (SolveMethod method : {SolveMethod::bvp, SolveMethod::quadrature}) {
    for (double a : {-0.1, 0.0, 0.1}) {
      const BackgroundProfile prof = build_profile(params_for(a), 4096);
      DecomposeOptions opt;
      opt.method = method;
      for (PulseKind kind : kKinds) {
        const FieldState e = pure_entropy(prof, kind);
        EXPECT_LT(l2_norm(decompose(e, prof, opt).acoustic) / l2_norm(e), 1e-6) << a;
        const FieldState s = pure_acoustic(prof, kind);
        EXPECT_LT(l2_norm(decompose(s, prof, opt).entropy) / l2_norm(s), 1e-6) << a;
      }
    }
  }
}

TEST(Decompose, ThreePointOptionStillConverges) {
  double prev = 0.0;
  for (std::size_t n : {512, 1024, 2048}) {
    const BackgroundProfile prof = build_profile(params_for(0.1), n);
    DecomposeOptions opt;
    opt.scheme = BvpScheme::three_point;
    const FieldState s = pure_acoustic(prof, PulseKind::gaussian);
    const double leak = l2_norm(decompose(s, prof, opt).entropy) / l2_norm(s);
    if (prev > 0.0) EXPECT_GT(order(prev, leak), 1.8);
    prev = leak;
  }
}

TEST(Decompose, SplitInvariants) {
  std::mt19937_64 rng(3);
  const std::size_t n = 4096;
  const BackgroundProfile prof = build_profile(params_for(0.1), n);
  FieldState total = pure_acoustic(prof, PulseKind::gaussian);
  const FieldState e = pure_entropy(prof, PulseKind::gaussian_derivative);
  const Field u = make_pulse({PulseKind::gaussian, 0.3, 0.4, 2.5}, prof.grid);
  for (std::size_t i = 0; i < n; ++i) {
    total.P[i] += e.P[i];
    total.Phi[i] += e.Phi[i];
    total.Uz[i] = u[i];
  }
  const ModeSplit s = decompose(total, prof);
  for (std::size_t i = 0; i < n; ++i) {
    EXPECT_EQ(s.entropy.Uz[i], 0.0);
    EXPECT_EQ(s.acoustic.Uz[i], total.Uz[i]);
    EXPECT_NEAR(s.acoustic.Phi[i] + s.entropy.Phi[i], total.Phi[i], 1e-13);
    EXPECT_NEAR(s.acoustic.P[i] + s.entropy.P[i], total.P[i], 1e-12);
  }
  // each part obeys its own link
  const Field phi0 = entropy_phi_from_p(s.entropy.P, prof);
  const Field pa = acoustic_p_from_phi(s.acoustic.Phi, prof);
  EXPECT_LT(testsupport::relative_l2(phi0, s.entropy.Phi), 1e-6);
  EXPECT_LT(testsupport::relative_l2(pa, s.acoustic.P), 1e-6);
  // and the recovered parts match the constructing ones
  EXPECT_LT(testsupport::relative_l2(s.entropy.P, e.P), 1e-6);
}

TEST(Decompose, Idempotent) {
  for (double a : {-0.1, 0.0, 0.1}) {
    const BackgroundProfile prof = build_profile(params_for(a), 4096);
    FieldState total = pure_acoustic(prof, PulseKind::gaussian);
    const FieldState e = pure_entropy(prof, PulseKind::gaussian);
    for (std::size_t i = 0; i < 4096; ++i) {
      total.P[i] += e.P[i];
      total.Phi[i] += e.Phi[i];
    }
    const ModeSplit first = decompose(total, prof);
    const ModeSplit again = decompose(first.acoustic, prof);
    EXPECT_LT(l2_norm(again.entropy) / l2_norm(first.acoustic), 1e-8) << a;
  }
}

TEST(Decompose, Linear) {
  std::mt19937_64 rng(5);
  const BackgroundProfile prof = build_profile(params_for(-0.1), 512);
  auto random_state = [&] {
    FieldState s = FieldState::zeros(prof.grid);
    s.Uz = testsupport::smooth_random_field(prof.grid, rng);
    s.P = testsupport::smooth_random_field(prof.grid, rng);
    s.Phi = testsupport::smooth_random_field(prof.grid, rng);
    return s;
  };
  const FieldState x = random_state();
  const FieldState y = random_state();
  FieldState c = FieldState::zeros(prof.grid);
  for (std::size_t i = 0; i < 512; ++i) {
    c.Uz[i] = 2.0 * x.Uz[i] - 3.0 * y.Uz[i];
    c.P[i] = 2.0 * x.P[i] - 3.0 * y.P[i];
    c.Phi[i] = 2.0 * x.Phi[i] - 3.0 * y.Phi[i];
  }
  const ModeSplit sx = decompose(x, prof);
  const ModeSplit sy = decompose(y, prof);
  const ModeSplit sc = decompose(c, prof);
  FieldState combo = sc.entropy;
  for (std::size_t i = 0; i < 512; ++i) {
    combo.P[i] -= 2.0 * sx.entropy.P[i] - 3.0 * sy.entropy.P[i];
    combo.Phi[i] -= 2.0 * sx.entropy.Phi[i] - 3.0 * sy.entropy.Phi[i];
  }
  EXPECT_LT(l2_norm(combo) / l2_norm(sc.entropy), 1e-10);
}

TEST(Decompose, RejectsUnstableAndMismatched) {
  AtmosphereParams p = params_for(-0.3);
  p.h = 3.0;
  const BackgroundProfile bad = build_profile(p, 64);
  EXPECT_THROW(decompose(FieldState::zeros(bad.grid), bad), UnstableBackground);
  const BackgroundProfile prof = build_profile(params_for(0.0), 64);
  EXPECT_THROW(decompose(FieldState::zeros(Grid1D(65, 6.0)), prof), GridMismatch);
}
