#include <cmath>
#include <stdexcept>
#include <string>

#include "proxsmooth/transforms.hpp"

namespace proxsmooth {

Transformed prox_average(const Transformed& f1, const Transformed& f2, double lam1, double lam2,
                         std::optional<std::size_t> dual_points) {
  if (!(lam1 > 0.0) || !(lam2 > 0.0) || std::abs(lam1 + lam2 - 1.0) > 1e-12)
    throw std::invalid_argument("prox_average: weights must be positive and sum to 1, got " +
                                std::to_string(lam1) + ", " + std::to_string(lam2));
  const Grid1D& grid = f1.grid();
  if (!(grid == f2.grid())) throw std::invalid_argument("prox_average: functions must share a grid");

  const Transformed g1(add_scaled_q(f1.function, 1.0), f1.trusted, f1.defined);
  const Transformed g2(add_scaled_q(f2.function, 1.0), f2.trusted, f2.defined);
  const std::size_t m = dual_points.value_or(grid.n());
  const DualGrid dual = DualGrid::covering(DualGrid::automatic(g1.function, m), DualGrid::automatic(g2.function, m), m);
  if (!(dual.grid().b() > dual.grid().a())) throw std::invalid_argument("prox_average: empty shared dual range");

  const Transformed c1 = conjugate(g1, dual);
  const Transformed c2 = conjugate(g2, dual);
  std::vector<ExtValue> mix(m);
  for (std::size_t j = 0; j < m; ++j) mix[j] = lam1 * c1.function[j] + lam2 * c2.function[j];
  const Transformed phi(GridFunction(dual.grid(), std::move(mix), Convexity::Assert),
                        combine(c1.trusted, c2.trusted, m), IndexRange{0, m - 1});

  Transformed back = conjugate(phi, DualGrid(grid));
  GridFunction p = add_scaled_q(back.function, -1.0);
  if (back.trusted.range) p = convexify(p, *back.trusted.range);
  const bool convex = is_discretely_convex(p.values(), p.finite_range());
  return Transformed(p.with_convexity(convex ? Convexity::Assert : Convexity::Unknown), back.trusted,
                     IndexRange{0, grid.n() - 1}, std::move(back.extremizer));
}

}  // namespace proxsmooth
