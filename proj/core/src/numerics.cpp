#include "modesplit/numerics.hpp"

#include <algorithm>
#include <cmath>

#include "modesplit/error.hpp"

namespace modesplit::numerics {

namespace {

// Boundary block of the SBP first-derivative operator (rows 0..3, columns 0..5).
constexpr double kClosure[4][6] = {
    {-24.0 / 17.0, 59.0 / 34.0, -4.0 / 17.0, -3.0 / 34.0, 0.0, 0.0},
    {-1.0 / 2.0, 0.0, 1.0 / 2.0, 0.0, 0.0, 0.0},
    {4.0 / 43.0, -59.0 / 86.0, 0.0, 59.0 / 86.0, -4.0 / 43.0, 0.0},
    {3.0 / 98.0, 0.0, -59.0 / 98.0, 0.0, 32.0 / 49.0, -4.0 / 49.0},
};

constexpr double kNormClosure[4] = {17.0 / 48.0, 59.0 / 48.0, 43.0 / 48.0, 49.0 / 48.0};

}  // namespace

Field derivative(std::span<const double> f, double dz) {
  Field d(f.size());
  derivative_into(f, dz, d);
  return d;
}

void derivative_into(std::span<const double> f, double dz, std::span<double> d) {
  const std::size_t n = f.size();
  if (n < 8) throw InvalidInput("derivative needs at least 8 samples");
  if (d.size() != n) throw InvalidInput("derivative: output size mismatch");
  const double inv = 1.0 / dz;
  const double c1 = 2.0 / 3.0 * inv;
  const double c2 = 1.0 / 12.0 * inv;
  for (std::size_t i = 4; i + 4 < n; ++i) {
    d[i] = c1 * (f[i + 1] - f[i - 1]) - c2 * (f[i + 2] - f[i - 2]);
  }
  const std::size_t m = n - 1;
  for (std::size_t r = 0; r < 4; ++r) {
    double lo = 0.0;
    double hi = 0.0;
    for (std::size_t c = 0; c < 6; ++c) {
      lo += kClosure[r][c] * f[c];
      hi -= kClosure[r][c] * f[m - c];
    }
    d[r] = lo * inv;
    d[m - r] = hi * inv;
  }
}

Field norm_weights(std::size_t n, double dz) {
  if (n < 8) throw InvalidInput("norm_weights needs at least 8 samples");
  Field w(n, dz);
  for (std::size_t r = 0; r < 4; ++r) {
    w[r] = kNormClosure[r] * dz;
    w[n - 1 - r] = kNormClosure[r] * dz;
  }
  return w;
}

double integral(std::span<const double> f, double dz) {
  const Field w = norm_weights(f.size(), dz);
  double sum = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) sum += w[i] * f[i];
  return sum;
}

Field cumulative_trapezoid(std::span<const double> f, double dz) {
  Field out(f.size(), 0.0);
  for (std::size_t i = 1; i < f.size(); ++i) {
    out[i] = out[i - 1] + 0.5 * dz * (f[i - 1] + f[i]);
  }
  return out;
}

Field cumulative_cubic(std::span<const double> f, double dz) {
  const std::size_t n = f.size();
  if (n < 4) throw InvalidInput("cumulative_cubic needs at least 4 samples");
  Field out(n, 0.0);
  const double s = dz / 24.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    double piece;
    if (i == 0) {
      piece = 9.0 * f[0] + 19.0 * f[1] - 5.0 * f[2] + f[3];
    } else if (i + 2 == n) {
      piece = f[i - 2] - 5.0 * f[i - 1] + 19.0 * f[i] + 9.0 * f[i + 1];
    } else {
      piece = -f[i - 1] + 13.0 * f[i] + 13.0 * f[i + 1] - f[i + 2];
    }
    out[i + 1] = out[i] + s * piece;
  }
  return out;
}

double trapezoid(std::span<const double> f, double dz) {
  if (f.empty()) return 0.0;
  double sum = 0.5 * (f.front() + f.back());
  for (std::size_t i = 1; i + 1 < f.size(); ++i) sum += f[i];
  return sum * dz;
}

double l2_norm(std::span<const double> f) {
  double sum = 0.0;
  for (double v : f) sum += v * v;
  return std::sqrt(sum);
}

double max_abs(std::span<const double> f) {
  double m = 0.0;
  for (double v : f) m = std::max(m, std::abs(v));
  return m;
}

std::vector<double> solve_tridiagonal(std::span<const double> lower, std::span<const double> diag,
                                      std::span<const double> upper, std::span<const double> rhs) {
  const std::size_t n = diag.size();
  if (lower.size() != n || upper.size() != n || rhs.size() != n) {
    throw InvalidInput("tridiagonal system: inconsistent sizes");
  }
  std::vector<double> c(n), x(n);
  double pivot = diag[0];
  if (pivot == 0.0 || !std::isfinite(pivot)) throw NumericalFailure("singular tridiagonal system");
  c[0] = upper[0] / pivot;
  x[0] = rhs[0] / pivot;
  for (std::size_t i = 1; i < n; ++i) {
    pivot = diag[i] - lower[i] * c[i - 1];
    if (pivot == 0.0 || !std::isfinite(pivot)) {
      throw NumericalFailure("singular tridiagonal system at row " + std::to_string(i));
    }
    c[i] = upper[i] / pivot;
    x[i] = (rhs[i] - lower[i] * x[i - 1]) / pivot;
  }
  for (std::size_t i = n - 1; i-- > 0;) x[i] -= c[i] * x[i + 1];
  return x;
}

}  // namespace modesplit::numerics
