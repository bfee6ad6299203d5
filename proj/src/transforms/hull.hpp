#pragma once

#include <span>
#include <vector>

#include "proxsmooth/ext_value.hpp"
#include "proxsmooth/grid.hpp"

namespace proxsmooth::detail {

/// Vertices of the lower convex hull of {(x_i, v_i) : i in range}, left to
/// right. Collinear points are dropped, so consecutive edge slopes increase
/// strictly. All values in range must be finite.
inline std::vector<std::size_t> lower_hull(const Grid1D& grid, std::span<const ExtValue> v, IndexRange range) {
  std::vector<std::size_t> hull;
  hull.reserve(range.size());
  for (std::size_t i = range.lo; i <= range.hi; ++i) {
    const double xi = grid.point(i);
    const double yi = v[i].value();
    while (hull.size() >= 2) {
      const std::size_t p0 = hull[hull.size() - 2];
      const std::size_t p1 = hull.back();
      const double x0 = grid.point(p0), y0 = v[p0].value();
      const double x1 = grid.point(p1), y1 = v[p1].value();
      // p1 stays only if it lies strictly below the chord p0 -> i
      if ((x1 - x0) * (yi - y0) - (y1 - y0) * (xi - x0) <= 0.0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(i);
  }
  return hull;
}

}  // namespace proxsmooth::detail
