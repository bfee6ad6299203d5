#include "proxsmooth/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace proxsmooth {

Grid1D::Grid1D(double a, double b, std::size_t n) : a_(a), b_(b), n_(n), h_(0.0) {
  if (!std::isfinite(a) || !std::isfinite(b))
    throw std::invalid_argument("grid endpoints must be finite");
  if (!(a < b))
    throw std::invalid_argument("grid requires a < b, got a=" + std::to_string(a) +
                                " b=" + std::to_string(b));
  if (n < 3) throw std::invalid_argument("grid requires n >= 3, got " + std::to_string(n));
  h_ = (b - a) / static_cast<double>(n - 1);
  if (!(h_ > 0.0)) throw std::invalid_argument("grid spacing underflows");
}

std::vector<double> Grid1D::points() const {
  std::vector<double> xs(n_);
  for (std::size_t i = 0; i < n_; ++i) xs[i] = point(i);
  return xs;
}

Grid1D make_grid(double a, double b, std::int64_t n) {
  if (n < 3) throw std::invalid_argument("grid requires n >= 3, got " + std::to_string(n));
  return Grid1D(a, b, static_cast<std::size_t>(n));
}

}  // namespace proxsmooth
