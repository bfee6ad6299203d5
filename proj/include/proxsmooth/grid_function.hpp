#pragma once

#include <span>
#include <vector>

#include "proxsmooth/ext_value.hpp"
#include "proxsmooth/grid.hpp"

namespace proxsmooth {

enum class Convexity {
  Unknown,  ///< no claim is made
  Assert,   ///< constructor verifies discrete convexity and throws if it fails
};

/// Slack for the discrete convexity test: 1e-9 * (1 + max |finite value|).
double convexity_tolerance(std::span<const ExtValue> values, IndexRange range);

/// True when every second difference v[i+1] - 2 v[i] + v[i-1] inside `range`
/// is >= -convexity_tolerance. All values in `range` must be finite.
bool is_discretely_convex(std::span<const ExtValue> values, IndexRange range);

/// A proper function sampled on a Grid1D.
///
/// Invariants (checked on construction):
///  - values.size() == grid.n()
///  - at least one value is finite
///  - finite values form one contiguous block (convex domain in 1-D)
///  - with Convexity::Assert, the finite block passes is_discretely_convex
class GridFunction {
 public:
  GridFunction(Grid1D grid, std::vector<ExtValue> values, Convexity convexity = Convexity::Unknown);

  /// Convenience: +inf doubles map to ExtValue::infinity().
  static GridFunction from_doubles(Grid1D grid, std::span<const double> values,
                                   Convexity convexity = Convexity::Unknown);

  const Grid1D& grid() const { return grid_; }
  std::size_t size() const { return values_.size(); }
  std::span<const ExtValue> values() const { return values_; }
  ExtValue operator[](std::size_t i) const { return values_[i]; }
  double x(std::size_t i) const { return grid_.point(i); }

  IndexRange finite_range() const { return finite_; }
  bool convex() const { return convex_; }

  /// Same samples, convexity re-validated when `convexity` is Assert.
  GridFunction with_convexity(Convexity convexity) const;

  std::vector<double> to_doubles() const;

 private:
  Grid1D grid_;
  std::vector<ExtValue> values_;
  IndexRange finite_;
  bool convex_ = false;
};

/// Linear interpolation between the bracketing samples; exact at grid points,
/// +inf when either bracket is +inf. Throws std::out_of_range outside [a, b].
ExtValue eval_interp(const GridFunction& f, double x);

/// eval_interp at every point of `target`; target must lie inside f's window.
/// The result keeps f's convexity claim (interpolants of convex data are convex).
GridFunction resample(const GridFunction& f, const Grid1D& target);

/// Pointwise f + c*q with q = x^2/2 sampled on f's grid.
GridFunction add_scaled_q(const GridFunction& f, double c);

}  // namespace proxsmooth
