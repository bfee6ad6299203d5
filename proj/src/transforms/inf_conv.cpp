#include <cmath>
#include <limits>
#include <stdexcept>

#include "proxsmooth/parallel.hpp"
#include "proxsmooth/transforms.hpp"

namespace proxsmooth {

Transformed inf_conv(const Transformed& fin, const Transformed& gin) {
  const GridFunction& f = fin.function;
  const GridFunction& g = gin.function;
  const double hf = f.grid().h(), hg = g.grid().h();
  if (std::abs(hf - hg) > 1e-12 * std::max(hf, hg))
    throw std::invalid_argument("inf_conv: grids must share their spacing");

  const std::size_t n = f.size() + g.size() - 1;
  const Grid1D out_grid(f.grid().a() + g.grid().a(), f.grid().b() + g.grid().b(), n);
  const IndexRange fr = f.finite_range(), gr = g.finite_range();

  std::vector<ExtValue> out(n, ExtValue::infinity());
  std::vector<std::size_t> arg(n, 0);
  std::vector<bool> ok(n, false);
  // x_i + y_j lands on output index i + j
  parallel_for(n, 64, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t k = lo; k < hi; ++k) {
      double best = std::numeric_limits<double>::infinity();
      std::size_t best_i = 0;
      bool found = false;
      const std::size_t i_lo = std::max(fr.lo, k >= gr.hi ? k - gr.hi : std::size_t{0});
      const std::size_t i_hi = std::min(fr.hi, k >= gr.lo ? k - gr.lo : std::size_t{0});
      if (k < fr.lo + gr.lo || i_lo > i_hi) continue;
      for (std::size_t i = i_lo; i <= i_hi; ++i) {
        const double v = f[i].value() + g[k - i].value();
        if (v < best) {
          best = v;
          best_i = i;
          found = true;
        }
      }
      if (!found) continue;
      out[k] = ExtValue(best);
      arg[k] = best_i;
      ok[k] = fin.trusted.accepts(best_i) && gin.trusted.accepts(k - best_i);
    }
  });
  const bool convex = f.convex() && g.convex();
  GridFunction r(out_grid, std::move(out), convex ? Convexity::Assert : Convexity::Unknown);
  TrustRegion t{longest_run(ok), false, false};
  return Transformed(std::move(r), t, IndexRange{0, n - 1}, std::move(arg));
}

}  // namespace proxsmooth
