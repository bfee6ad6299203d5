#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "hull.hpp"
#include "proxsmooth/parallel.hpp"
#include "proxsmooth/transforms.hpp"

namespace proxsmooth {

namespace {

std::pair<double, double> slope_range(const GridFunction& f) {
  const IndexRange fr = f.finite_range();
  const double h = f.grid().h();
  double s_min = 0.0;
  double s_max = 0.0;
  for (std::size_t i = fr.lo; i < fr.hi; ++i) {
    const double s = (f[i + 1].value() - f[i].value()) / h;
    if (i == fr.lo) s_min = s_max = s;
    s_min = std::min(s_min, s);
    s_max = std::max(s_max, s);
  }
  return {s_min, s_max};
}

}  // namespace

DualGrid DualGrid::automatic(const GridFunction& f, std::optional<std::size_t> n) {
  const auto [s_min, s_max] = slope_range(f);
  const double margin = 0.05 * (s_max - s_min + 1.0);
  if (!std::isfinite(s_min - margin) || !std::isfinite(s_max + margin))
    throw std::invalid_argument("dual grid: slope range is not finite");
  return DualGrid(Grid1D(s_min - margin, s_max + margin, n.value_or(f.size())));
}

DualGrid DualGrid::covering(const DualGrid& a, const DualGrid& b, std::size_t n) {
  return DualGrid(Grid1D(std::min(a.grid().a(), b.grid().a()), std::max(a.grid().b(), b.grid().b()), n));
}

DualGrid DualGrid::aligned(const GridFunction& f, double lo, double hi, std::size_t max_points) {
  const auto [s_min, s_max] = slope_range(f);
  const Grid1D base = automatic(f).grid();
  const double a = std::min(lo, base.a()), b = std::max(hi, base.b());
  const double budget = static_cast<double>(std::max<std::size_t>(max_points, 4) - 3);
  double step = std::max(base.h(), (b - a) / budget);
  if (s_max > s_min) {
    // a whole number of steps between the extreme slopes puts both on the grid
    const double k = std::floor((s_max - s_min) / step);
    if (k >= 1.0) step = (s_max - s_min) / k;
  }
  const auto left = static_cast<std::size_t>(std::ceil((s_min - a) / step));
  const auto right = static_cast<std::size_t>(std::ceil((b - s_min) / step));
  return DualGrid(Grid1D(s_min - static_cast<double>(left) * step, s_min + static_cast<double>(right) * step,
                         std::max<std::size_t>(left + right + 1, 3)));
}

Transformed conjugate(const Transformed& in, const DualGrid& dual) {
  const GridFunction& f = in.function;
  const Grid1D& x = f.grid();
  const Grid1D& s = dual.grid();
  const std::vector<std::size_t> hull = detail::lower_hull(x, f.values(), f.finite_range());

  std::vector<ExtValue> out(s.n());
  std::vector<std::size_t> arg(s.n());
  std::size_t k = 0;
  for (std::size_t j = 0; j < s.n(); ++j) {
    const double sj = s.point(j);
    // advance while the next hull edge is strictly shallower than s_j
    while (k + 1 < hull.size()) {
      const std::size_t a = hull[k], b = hull[k + 1];
      const double edge = (f[b].value() - f[a].value()) / (x.point(b) - x.point(a));
      if (edge < sj)
        ++k;
      else
        break;
    }
    const std::size_t i = hull[k];
    out[j] = ExtValue(sj * x.point(i) - f[i].value());
    arg[j] = i;
    // on a tie with an adjacent edge the whole edge maximizes; report a
    // trusted point of it
    if (!in.trusted.accepts(i) && in.trusted.range) {
      const IndexRange r = *in.trusted.range;
      const std::size_t lo = in.trusted.closed_lo ? r.lo : r.lo + 1;
      const std::size_t hi = in.trusted.closed_hi ? r.hi : r.hi - std::min<std::size_t>(r.hi, 1);
      auto tied = [&](std::size_t a, std::size_t b) {
        const double edge = (f[b].value() - f[a].value()) / (x.point(b) - x.point(a));
        return std::abs(edge - sj) <= 1e-12 * std::max(1.0, std::abs(sj));
      };
      auto pick = [&](std::size_t a, std::size_t b) {
        const std::size_t c = std::max(a, lo);
        if (lo <= hi && c <= std::min(b, hi) && in.trusted.accepts(c) && tied(a, b)) {
          arg[j] = c;
          return true;
        }
        return false;
      };
      if (!(k + 1 < hull.size() && pick(i, hull[k + 1])) && k > 0) pick(hull[k - 1], i);
    }
  }
  GridFunction g(s, std::move(out), Convexity::Assert);
  TrustRegion t = trust_from_extremizers(arg, in.trusted, true);
  const IndexRange all{0, s.n() - 1};
  return Transformed(std::move(g), t, all, std::move(arg));
}

Transformed conjugate_bruteforce(const Transformed& in, const DualGrid& dual) {
  const GridFunction& f = in.function;
  const Grid1D& x = f.grid();
  const Grid1D& s = dual.grid();
  const IndexRange fr = f.finite_range();

  std::vector<ExtValue> out(s.n());
  std::vector<std::size_t> arg(s.n());
  parallel_for(s.n(), 64, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t j = lo; j < hi; ++j) {
      const double sj = s.point(j);
      double best = -std::numeric_limits<double>::infinity();
      std::size_t best_i = fr.lo;
      for (std::size_t i = fr.lo; i <= fr.hi; ++i) {
        const double v = sj * x.point(i) - f[i].value();
        if (v > best) {
          best = v;
          best_i = i;
        }
      }
      out[j] = ExtValue(best);
      arg[j] = best_i;
    }
  });
  GridFunction g(s, std::move(out), Convexity::Assert);
  TrustRegion t = trust_from_extremizers(arg, in.trusted, true);
  const IndexRange all{0, s.n() - 1};
  return Transformed(std::move(g), t, all, std::move(arg));
}

double fenchel_young_residual(const GridFunction& f, const GridFunction& g) {
  const IndexRange fr = f.finite_range();
  const IndexRange gr = g.finite_range();
  const std::size_t rows = fr.size();
  std::vector<double> row_min(rows, std::numeric_limits<double>::infinity());
  parallel_for(rows, 64, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t r = lo; r < hi; ++r) {
      const std::size_t i = fr.lo + r;
      const double xi = f.x(i);
      const double fi = f[i].value();
      double m = std::numeric_limits<double>::infinity();
      for (std::size_t j = gr.lo; j <= gr.hi; ++j) m = std::min(m, fi + g[j].value() - xi * g.x(j));
      row_min[r] = m;
    }
  });
  return *std::min_element(row_min.begin(), row_min.end());
}

GridFunction convexify(const GridFunction& f, IndexRange range) {
  for (std::size_t i = range.lo; i <= range.hi; ++i)
    if (f[i].is_infinite()) throw std::invalid_argument("convexify: range must be finite");
  const Grid1D& x = f.grid();
  const std::vector<std::size_t> hull = detail::lower_hull(x, f.values(), range);
  std::vector<ExtValue> out(f.values().begin(), f.values().end());
  for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
    const std::size_t a = hull[k], b = hull[k + 1];
    const double xa = x.point(a), xb = x.point(b);
    const double va = f[a].value(), vb = f[b].value();
    for (std::size_t i = a + 1; i < b; ++i) {
      const double t = (x.point(i) - xa) / (xb - xa);
      out[i] = ExtValue(std::min(f[i].value(), (1.0 - t) * va + t * vb));
    }
  }
  return GridFunction(x, std::move(out));
}

}  // namespace proxsmooth
