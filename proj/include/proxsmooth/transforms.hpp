#pragma once

#include <optional>

#include "proxsmooth/grid_function.hpp"
#include "proxsmooth/trust.hpp"

namespace proxsmooth {

/// Grid over the slope (dual) variable.
class DualGrid {
 public:
  explicit DualGrid(Grid1D grid) : grid_(grid) {}

  /// [s_min - m, s_max + m] with m = 0.05 (s_max - s_min + 1), where s_min and
  /// s_max are the extreme adjacent-difference slopes of f's finite block.
  /// Uses f's point count unless `n` is given.
  static DualGrid automatic(const GridFunction& f, std::optional<std::size_t> n = std::nullopt);

  /// Smallest grid with `n` points covering both.
  static DualGrid covering(const DualGrid& a, const DualGrid& b, std::size_t n);

  /// Covers f's automatic range and [lo, hi] at roughly the automatic spacing
  /// (coarser when more than `max_points` points would be needed), with the
  /// extreme data slopes landing on grid points.
  static DualGrid aligned(const GridFunction& f, double lo, double hi, std::size_t max_points);

  const Grid1D& grid() const { return grid_; }

 private:
  Grid1D grid_;
};

/// Discrete conjugate g(s_j) = max_i (s_j x_i - f_i) over finite samples, by
/// the linear-time Legendre transform (lower hull, then a merge with the
/// sorted slopes). Output lives on the dual grid, asserts convexity, and
/// records the argmax per dual point.
Transformed conjugate(const Transformed& f, const DualGrid& dual);

/// Same definition as a direct O(n m) double loop; the oracle for conjugate().
Transformed conjugate_bruteforce(const Transformed& f, const DualGrid& dual);

enum class MoreauMethod { Fast, BruteForce };

/// e_lambda f(x_j) = min_i f_i + (x_j - x_i)^2 / (2 lambda) on f's grid.
/// Fast is the lower envelope of parabolas in O(n); BruteForce is O(n^2).
/// Any lambda > 0 is accepted.
Transformed moreau(const Transformed& f, double lambda, MoreauMethod method = MoreauMethod::Fast);

/// e_lambda f(x) = q(x)/lambda - e_{1/lambda}(f*)(x/lambda), computed through
/// the numerical conjugate. The default dual grid is
/// DualGrid::aligned(f, a/lambda, b/lambda, 64 n);
/// with an explicit narrower grid, points whose x/lambda leaves it are
/// undefined.
Transformed moreau_dual_identity(const Transformed& f, double lambda,
                                 std::optional<DualGrid> dual = std::nullopt);

/// (f □ g)(x) = min over y of f(y) + g(x - y) on the Minkowski-sum window,
/// evaluated directly. Both grids must share their spacing.
Transformed inf_conv(const Transformed& f, const Transformed& g);

/// P(f1, f2; lam1, lam2) = (lam1 (f1+q)^* + lam2 (f2+q)^*)^* - q.
///
/// Both conjugates go onto one dual grid covering both automatic ranges,
/// are combined pointwise, and are conjugated back onto the primal grid.
/// The last step can leave O(h^2) dents where a sampled conjugate is locally
/// linear, so the result is replaced by its lower convex envelope over the
/// trusted range. Convexity is asserted when the whole output passes.
Transformed prox_average(const Transformed& f1, const Transformed& f2, double lam1, double lam2,
                         std::optional<std::size_t> dual_points = std::nullopt);

/// min over finite pairs of f(x_i) + g(s_j) - x_i s_j; nonnegative (up to
/// rounding) when g is a conjugate of f.
double fenchel_young_residual(const GridFunction& f, const GridFunction& g);

/// Lower convex envelope of f over `range`; values outside are untouched.
GridFunction convexify(const GridFunction& f, IndexRange range);

}  // namespace proxsmooth
