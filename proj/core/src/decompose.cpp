#include "modesplit/decompose.hpp"

#include <cmath>

#include "modesplit/error.hpp"
#include "modesplit/modal_relations.hpp"
#include "modesplit/numerics.hpp"

namespace modesplit {

namespace {

void check_size(std::span<const double> f, const BackgroundProfile& profile, const char* what) {
  if (f.size() != profile.grid.size()) {
    throw GridMismatch(std::string(what) + ": field size does not match the profile grid");
  }
}

Field integrate(std::span<const double> f, double dz, QuadratureRule rule) {
  return rule == QuadratureRule::cubic ? numerics::cumulative_cubic(f, dz)
                                       : numerics::cumulative_trapezoid(f, dz);
}

// Particular solution R2 int R1 D - R1 int R2 D (zero value at z = 0).
Field particular_solution(std::span<const double> D, const HomogeneousPair& pair, double dz,
                          QuadratureRule rule) {
  const std::size_t n = D.size();
  Field r1d(n), r2d(n);
  for (std::size_t i = 0; i < n; ++i) {
    r1d[i] = pair.R1[i] * D[i];
    r2d[i] = pair.R2[i] * D[i];
  }
  const Field i1 = integrate(r1d, dz, rule);
  const Field i2 = integrate(r2d, dz, rule);
  Field r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = pair.R2[i] * i1[i] - pair.R1[i] * i2[i];
  return r;
}

// Averaging applied to the undifferentiated terms: Numerov weights (1, 10, 1)/12
// or the point value.
double stencil_average(std::span<const double> f, std::size_t i, BvpScheme scheme) {
  if (scheme == BvpScheme::three_point) return f[i];
  return (f[i - 1] + 10.0 * f[i] + f[i + 1]) / 12.0;
}

}  // namespace

HomogeneousPair homogeneous_solutions(const BackgroundProfile& profile) {
  const AtmosphereParams& p = profile.params;
  const std::size_t n = profile.grid.size();
  HomogeneousPair pair{Field(n), Field(n)};
  if (p.isothermal()) {
    for (std::size_t i = 0; i < n; ++i) {
      const long double half = 0.5L * profile.grid.z(i) / p.H0;
      pair.R1[i] = static_cast<double>(std::exp(-half));
      pair.R2[i] = static_cast<double>(2.0L * p.H0 * std::sinh(half));
    }
    return pair;
  }
  const double a = p.alphaH0;
  if (std::abs(1.0 + a) < AtmosphereParams::kIsothermalThreshold) {
    throw SingularParameter("homogeneous solutions: alphaH0 = -1 makes 1 + alphaH0 vanish");
  }
  // Extended precision keeps the samples correctly rounded; the R operator
  // divides their rounding noise by dz^2.
  const long double al = a;
  for (std::size_t i = 0; i < n; ++i) {
    const long double log_eta = std::log1p(al * profile.grid.z(i) / p.H0);
    const long double r1 = std::exp(-log_eta / (2.0L * al));
    pair.R1[i] = static_cast<double>(r1);
    pair.R2[i] = static_cast<double>(p.H0 * r1 * std::expm1((1.0L + 1.0L / al) * log_eta) /
                                     (1.0L + al));
  }
  return pair;
}

Field r_equation_coefficient(const BackgroundProfile& profile) {
  const double H0 = profile.params.H0;
  const double deta = profile.params.alphaH0 / H0;
  Field q(profile.grid.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    const double eta = profile.eta[i];
    q[i] = (1.0 + 2.0 * H0 * deta) / (4.0 * H0 * H0 * eta * eta);
  }
  return q;
}

Field rhs_D(std::span<const double> P, std::span<const double> Phi,
            const BackgroundProfile& profile) {
  check_size(P, profile, "rhs_D");
  check_size(Phi, profile, "rhs_D");
  const double gamma = profile.params.gamma;
  const double H0 = profile.params.H0;
  const Field dP = numerics::derivative(P, profile.grid.spacing());
  Field D(P.size());
  for (std::size_t i = 0; i < D.size(); ++i) {
    const double eta = profile.eta[i];
    const double bracket =
        2.0 * Phi[i] + (gamma - 2.0) * P[i] - 2.0 * gamma * H0 * eta * dP[i];
    D[i] = -bracket / (2.0 * H0 * H0 * eta * gamma * gamma);
  }
  return D;
}

Field solve_R_quadrature(std::span<const double> D, const BackgroundProfile& profile, double C1,
                         double C2, QuadratureRule rule) {
  check_size(D, profile, "solve_R_quadrature");
  const HomogeneousPair pair = homogeneous_solutions(profile);
  Field r = particular_solution(D, pair, profile.grid.spacing(), rule);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += C1 * pair.R1[i] + C2 * pair.R2[i];
  return r;
}

QuadratureConstants fit_quadrature_constants(std::span<const double> D,
                                             const BackgroundProfile& profile, double r_lo,
                                             double r_hi, QuadratureRule rule) {
  check_size(D, profile, "fit_quadrature_constants");
  const HomogeneousPair pair = homogeneous_solutions(profile);
  const Field rp = particular_solution(D, pair, profile.grid.spacing(), rule);
  const std::size_t last = rp.size() - 1;
  const double r2h = pair.R2[last];
  if (r2h == 0.0 || !std::isfinite(r2h)) {
    throw NumericalFailure("cannot fit boundary values: R2(h) vanishes");
  }
  const double C1 = r_lo;
  const double C2 = (r_hi - rp[last] - C1 * pair.R1[last]) / r2h;
  return {C1, C2};
}

Field solve_R_bvp(std::span<const double> D, const BackgroundProfile& profile,
                  const RBoundary& bc, BvpScheme scheme) {
  check_size(D, profile, "solve_R_bvp");
  const std::size_t n = D.size();
  const double dz = profile.grid.spacing();
  const double dz2 = dz * dz;
  const Field q = r_equation_coefficient(profile);

  double r_lo = 0.0;
  double r_hi = 0.0;
  if (const auto* m = std::get_if<MatchValues>(&bc)) {
    r_lo = m->r_lo;
    r_hi = m->r_hi;
  }

  // Unknowns are the interior samples 1..n-2.
  const std::size_t m = n - 2;
  std::vector<double> lower(m), diag(m), upper(m), rhs(m);
  const bool numerov = scheme == BvpScheme::numerov;
  const double side = numerov ? 1.0 / 12.0 : 0.0;
  const double centre = numerov ? 10.0 / 12.0 : 1.0;
  for (std::size_t k = 0; k < m; ++k) {
    const std::size_t i = k + 1;
    lower[k] = 1.0 - dz2 * side * q[i - 1];
    diag[k] = -2.0 - dz2 * centre * q[i];
    upper[k] = 1.0 - dz2 * side * q[i + 1];
    rhs[k] = dz2 * stencil_average(D, i, scheme);
  }
  rhs.front() -= lower.front() * r_lo;
  rhs.back() -= upper.back() * r_hi;

  const std::vector<double> interior = numerics::solve_tridiagonal(lower, diag, upper, rhs);
  Field R(n);
  R.front() = r_lo;
  R.back() = r_hi;
  for (std::size_t k = 0; k < m; ++k) R[k + 1] = interior[k];
  return R;
}

Field r_operator_residual(std::span<const double> R, std::span<const double> D,
                          const BackgroundProfile& profile, BvpScheme scheme) {
  check_size(R, profile, "r_operator_residual");
  check_size(D, profile, "r_operator_residual");
  const std::size_t n = R.size();
  const double dz = profile.grid.spacing();
  const double H0 = profile.params.H0;
  const Field q = r_equation_coefficient(profile);
  Field qr(n);
  for (std::size_t i = 0; i < n; ++i) qr[i] = q[i] * R[i];
  Field res(n, 0.0);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double d2 = (R[i - 1] - 2.0 * R[i] + R[i + 1]) / (dz * dz);
    const double normalized = d2 - stencil_average(qr, i, scheme) - stencil_average(D, i, scheme);
    const double eta = profile.eta[i];
    res[i] = -4.0 * H0 * H0 * eta * eta * normalized;
  }
  return res;
}

ModeSplit decompose(const FieldState& total, const BackgroundProfile& profile,
                    const DecomposeOptions& options) {
  require_same_grid(total.grid, profile.grid, "decompose");
  total.validate();
  require_stable(check_stability(profile));

  const Field D = rhs_D(total.P, total.Phi, profile);
  double r_lo = 0.0;
  double r_hi = 0.0;
  if (const auto* m = std::get_if<MatchValues>(&options.bc)) {
    r_lo = m->r_lo;
    r_hi = m->r_hi;
  }

  Field R;
  if (options.method == SolveMethod::bvp) {
    R = solve_R_bvp(D, profile, options.bc, options.scheme);
  } else {
    const QuadratureConstants c = fit_quadrature_constants(D, profile, r_lo, r_hi, options.rule);
    R = solve_R_quadrature(D, profile, c.C1, c.C2, options.rule);
  }

  const std::size_t n = R.size();
  ModeSplit split{FieldState::zeros(total.grid, total.t), FieldState::zeros(total.grid, total.t)};
  split.acoustic.Uz = total.Uz;
  split.acoustic.P = acoustic_p_from_r(R, profile);
  for (std::size_t i = 0; i < n; ++i) {
    split.acoustic.Phi[i] = profile.nu[i] / profile.eta[i] * R[i];
    split.entropy.P[i] = total.P[i] - split.acoustic.P[i];
    split.entropy.Phi[i] = total.Phi[i] - split.acoustic.Phi[i];
  }
  return split;
}

}  // namespace modesplit
