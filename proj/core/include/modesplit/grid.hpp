#pragma once

#include <cstddef>
#include <memory>
#include <vector>

namespace modesplit {

/// Per-sample scalar field on a Grid1D.
using Field = std::vector<double>;

/// Uniform 1-D grid covering [0, h] with n samples, z[0] = 0 and z[n-1] = h.
class Grid1D {
 public:
  static constexpr std::size_t kMinSamples = 16;

  /// Throws InvalidInput for n < 16 or a non-positive / non-finite height.
  Grid1D(std::size_t n, double h);

  [[nodiscard]] std::size_t size() const noexcept { return z_->size(); }
  [[nodiscard]] double height() const noexcept { return h_; }
  [[nodiscard]] double spacing() const noexcept { return dz_; }
  [[nodiscard]] double z(std::size_t i) const noexcept { return (*z_)[i]; }
  [[nodiscard]] const std::vector<double>& positions() const noexcept { return *z_; }

  bool operator==(const Grid1D& other) const noexcept {
    return size() == other.size() && h_ == other.h_;
  }

 private:
  double h_;
  double dz_;
  // Shared and immutable, so copying a grid (and every state) is cheap.
  std::shared_ptr<const std::vector<double>> z_;
};

/// Throws GridMismatch unless both grids are identical.
void require_same_grid(const Grid1D& a, const Grid1D& b, const char* what);

}  // namespace modesplit
