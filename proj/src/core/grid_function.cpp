#include "proxsmooth/grid_function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace proxsmooth {

double convexity_tolerance(std::span<const ExtValue> values, IndexRange range) {
  double scale = 0.0;
  for (std::size_t i = range.lo; i <= range.hi; ++i)
    if (values[i].is_finite()) scale = std::max(scale, std::abs(values[i].value()));
  return 1e-9 * (1.0 + scale);
}

bool is_discretely_convex(std::span<const ExtValue> values, IndexRange range) {
  if (range.size() < 3) return true;
  const double tol = convexity_tolerance(values, range);
  for (std::size_t i = range.lo + 1; i < range.hi; ++i) {
    const double d2 = values[i + 1].value() - 2.0 * values[i].value() + values[i - 1].value();
    if (!(d2 >= -tol)) return false;
  }
  return true;
}

GridFunction::GridFunction(Grid1D grid, std::vector<ExtValue> values, Convexity convexity)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.n())
    throw std::invalid_argument("GridFunction: " + std::to_string(values_.size()) +
                                " values for a grid of " + std::to_string(grid_.n()) + " points");
  auto first = std::find_if(values_.begin(), values_.end(), [](ExtValue v) { return v.is_finite(); });
  if (first == values_.end())
    throw std::invalid_argument("GridFunction: no finite value (function is not proper on the window)");
  auto last = std::find_if(values_.rbegin(), values_.rend(), [](ExtValue v) { return v.is_finite(); });
  finite_.lo = static_cast<std::size_t>(first - values_.begin());
  finite_.hi = values_.size() - 1 - static_cast<std::size_t>(last - values_.rbegin());
  for (std::size_t i = finite_.lo; i <= finite_.hi; ++i)
    if (values_[i].is_infinite())
      throw std::invalid_argument("GridFunction: finite values are not contiguous (hole at index " +
                                  std::to_string(i) + ")");
  if (convexity == Convexity::Assert) {
    if (!is_discretely_convex(values_, finite_))
      throw std::invalid_argument("GridFunction: convexity asserted but second differences are negative");
    convex_ = true;
  }
}

GridFunction GridFunction::from_doubles(Grid1D grid, std::span<const double> values, Convexity convexity) {
  std::vector<ExtValue> ev;
  ev.reserve(values.size());
  for (double v : values) ev.push_back(std::isinf(v) && v > 0 ? ExtValue::infinity() : ExtValue(v));
  return GridFunction(grid, std::move(ev), convexity);
}

GridFunction GridFunction::with_convexity(Convexity convexity) const {
  return GridFunction(grid_, values_, convexity);
}

std::vector<double> GridFunction::to_doubles() const {
  std::vector<double> out(values_.size());
  std::transform(values_.begin(), values_.end(), out.begin(), [](ExtValue v) { return v.value(); });
  return out;
}

ExtValue eval_interp(const GridFunction& f, double x) {
  const Grid1D& g = f.grid();
  if (!(x >= g.a() && x <= g.b()))
    throw std::out_of_range("eval_interp: x=" + std::to_string(x) + " outside [" + std::to_string(g.a()) +
                            ", " + std::to_string(g.b()) + "]");
  const double u = (x - g.a()) / g.h();
  const auto last = g.n() - 1;
  // grid points come back bit-exactly
  auto nearest = static_cast<std::size_t>(std::min<double>(std::max(std::round(u), 0.0), double(last)));
  if (g.point(nearest) == x) return f[nearest];
  auto k = static_cast<std::size_t>(std::min<double>(std::max(std::floor(u), 0.0), double(last - 1)));
  if (x < g.point(k) && k > 0) --k;
  if (x > g.point(k + 1) && k + 1 < last) ++k;
  const ExtValue lo = f[k];
  const ExtValue hi = f[k + 1];
  if (lo.is_infinite() || hi.is_infinite()) return ExtValue::infinity();
  const double x0 = g.point(k);
  const double t = (x - x0) / (g.point(k + 1) - x0);
  return ExtValue((1.0 - t) * lo.value() + t * hi.value());
}

GridFunction resample(const GridFunction& f, const Grid1D& target) {
  if (target.a() < f.grid().a() || target.b() > f.grid().b())
    throw std::out_of_range("resample: target window exceeds the source window");
  std::vector<ExtValue> out(target.n());
  for (std::size_t i = 0; i < target.n(); ++i) out[i] = eval_interp(f, target.point(i));
  return GridFunction(target, std::move(out), f.convex() ? Convexity::Assert : Convexity::Unknown);
}

GridFunction add_scaled_q(const GridFunction& f, double c) {
  std::vector<ExtValue> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double x = f.x(i);
    out[i] = f[i] + c * 0.5 * x * x;
  }
  const bool keeps_convexity = f.convex() && c >= 0.0;
  return GridFunction(f.grid(), std::move(out), keeps_convexity ? Convexity::Assert : Convexity::Unknown);
}

}  // namespace proxsmooth
