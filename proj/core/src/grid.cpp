#include "modesplit/grid.hpp"

#include <cmath>
#include <string>

#include "modesplit/error.hpp"

namespace modesplit {

Grid1D::Grid1D(std::size_t n, double h) : h_(h), dz_(0.0) {
  if (n < kMinSamples) {
    throw InvalidInput("grid needs at least " + std::to_string(kMinSamples) +
                       " samples, got " + std::to_string(n));
  }
  if (!std::isfinite(h) || h <= 0.0) {
    throw InvalidInput("grid height must be finite and positive");
  }
  dz_ = h / static_cast<double>(n - 1);
  auto z = std::make_shared<std::vector<double>>(n);
  for (std::size_t i = 0; i < n; ++i) (*z)[i] = static_cast<double>(i) * dz_;
  z->back() = h;
  z_ = std::move(z);
}

void require_same_grid(const Grid1D& a, const Grid1D& b, const char* what) {
  if (!(a == b)) {
    throw GridMismatch(std::string(what) + ": fields live on different grids");
  }
}

}  // namespace modesplit
