#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "proxsmooth/parallel.hpp"
#include "proxsmooth/transforms.hpp"

namespace proxsmooth {

namespace {

// Index of the parabola f_i + (x - x_i)^2 / (2 lambda) attaining the lower
// envelope at each grid point (Felzenszwalb-Huttenlocher sweep).
std::vector<std::size_t> envelope_argmin(const GridFunction& f, double lambda) {
  const Grid1D& g = f.grid();
  const IndexRange fr = f.finite_range();
  const double inf = std::numeric_limits<double>::infinity();

  std::vector<std::size_t> v(fr.size());
  std::vector<double> z(fr.size() + 1);
  std::size_t k = 0;
  v[0] = fr.lo;
  z[0] = -inf;
  z[1] = inf;
  auto crossing = [&](std::size_t p, std::size_t q) {
    const double xp = g.point(p), xq = g.point(q);
    return lambda * (f[q].value() - f[p].value()) / (xq - xp) + 0.5 * (xq + xp);
  };
  for (std::size_t q = fr.lo + 1; q <= fr.hi; ++q) {
    double s = crossing(v[k], q);
    while (s <= z[k]) {
      --k;
      s = crossing(v[k], q);
    }
    ++k;
    v[k] = q;
    z[k] = s;
    z[k + 1] = inf;
  }

  std::vector<std::size_t> arg(g.n());
  k = 0;
  for (std::size_t j = 0; j < g.n(); ++j) {
    const double xj = g.point(j);
    while (z[k + 1] < xj) ++k;
    arg[j] = v[k];
  }
  return arg;
}

std::vector<std::size_t> bruteforce_argmin(const GridFunction& f, double lambda) {
  const Grid1D& g = f.grid();
  const IndexRange fr = f.finite_range();
  std::vector<std::size_t> arg(g.n());
  parallel_for(g.n(), 64, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t j = lo; j < hi; ++j) {
      const double xj = g.point(j);
      double best = std::numeric_limits<double>::infinity();
      std::size_t best_i = fr.lo;
      for (std::size_t i = fr.lo; i <= fr.hi; ++i) {
        const double d = xj - g.point(i);
        const double v = f[i].value() + d * d / (2.0 * lambda);
        if (v < best) {
          best = v;
          best_i = i;
        }
      }
      arg[j] = best_i;
    }
  });
  return arg;
}

}  // namespace

Transformed moreau(const Transformed& in, double lambda, MoreauMethod method) {
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw std::invalid_argument("moreau: lambda must be positive, got " + std::to_string(lambda));
  const GridFunction& f = in.function;
  const Grid1D& g = f.grid();
  std::vector<std::size_t> arg =
      method == MoreauMethod::Fast ? envelope_argmin(f, lambda) : bruteforce_argmin(f, lambda);

  std::vector<ExtValue> out(g.n());
  for (std::size_t j = 0; j < g.n(); ++j) {
    const std::size_t i = arg[j];
    const double d = g.point(j) - g.point(i);
    out[j] = ExtValue(f[i].value() + d * d / (2.0 * lambda));
  }
  GridFunction e(g, std::move(out), f.convex() ? Convexity::Assert : Convexity::Unknown);
  TrustRegion t = trust_from_extremizers(arg, in.trusted, false);
  return Transformed(std::move(e), t, IndexRange{0, g.n() - 1}, std::move(arg));
}

Transformed moreau_dual_identity(const Transformed& in, double lambda, std::optional<DualGrid> dual) {
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw std::invalid_argument("moreau_dual_identity: lambda must be positive, got " + std::to_string(lambda));
  const GridFunction& f = in.function;
  const Grid1D& g = f.grid();
  if (!dual) {
    dual = DualGrid::aligned(f, g.a() / lambda, g.b() / lambda, 64 * g.n());
  }
  const Transformed fstar = conjugate(in, *dual);
  const Transformed env = moreau(fstar, 1.0 / lambda);
  const Grid1D& s = dual->grid();

  std::vector<ExtValue> out(g.n(), ExtValue::infinity());
  std::vector<bool> defined(g.n()), trusted(g.n());
  for (std::size_t j = 0; j < g.n(); ++j) {
    const double x = g.point(j);
    const double y = x / lambda;
    if (!s.contains(y)) continue;
    defined[j] = true;
    const ExtValue e = eval_interp(env.function, y);
    out[j] = ExtValue(0.5 * x * x / lambda - e.value());
    const auto k = static_cast<std::size_t>(std::clamp(std::floor((y - s.a()) / s.h()), 0.0, double(s.n() - 1)));
    trusted[j] = env.trusted.contains(k) && env.trusted.contains(std::min(k + 1, s.n() - 1));
  }
  const auto def = longest_run(defined);
  if (!def) throw std::invalid_argument("moreau_dual_identity: x/lambda leaves the dual window everywhere");
  for (std::size_t j = 0; j < g.n(); ++j) trusted[j] = trusted[j] && def->contains(j);
  TrustRegion t{longest_run(trusted), false, false};
  return Transformed(GridFunction(g, std::move(out)), t, *def);
}

}  // namespace proxsmooth
