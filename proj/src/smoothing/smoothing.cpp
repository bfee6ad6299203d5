#include "proxsmooth/smoothing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "proxsmooth/function_spec.hpp"

namespace proxsmooth {

namespace {

// scale * t + quad * q on t's grid; trust and definedness carry over.
Transformed scale_add_q(const Transformed& t, double scale, double quad) {
  const GridFunction& f = t.function;
  std::vector<ExtValue> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double x = f.x(i);
    out[i] = scale * f[i] + quad * 0.5 * x * x;
  }
  GridFunction g(f.grid(), std::move(out), f.convex() ? Convexity::Assert : Convexity::Unknown);
  return Transformed(std::move(g), t.trusted, t.defined);
}

// x -> scale * inner(c x) + quad * q(x) on inner's grid. Points whose c x
// leaves the window are undefined (+inf); points whose bracketing samples
// are not both trusted are untrusted.
Transformed compose(const Transformed& inner, double c, double scale, double quad) {
  const Grid1D& g = inner.grid();
  std::vector<ExtValue> out(g.n(), ExtValue::infinity());
  std::vector<bool> defined(g.n()), trusted(g.n());
  for (std::size_t j = 0; j < g.n(); ++j) {
    const double x = g.point(j);
    const double y = c * x;
    if (!g.contains(y)) continue;
    defined[j] = true;
    out[j] = scale * eval_interp(inner.function, y) + quad * 0.5 * x * x;
    const auto k = static_cast<std::size_t>(std::clamp(std::floor((y - g.a()) / g.h()), 0.0, double(g.n() - 2)));
    trusted[j] = inner.trusted.contains(k) && inner.trusted.contains(k + 1) && inner.defined.contains(k) &&
                 inner.defined.contains(k + 1);
  }
  const auto def = longest_run(defined);
  if (!def) throw std::invalid_argument("composition leaves the window at every grid point");
  for (std::size_t j = 0; j < g.n(); ++j) trusted[j] = trusted[j] && def->contains(j);
  const bool convex = inner.function.convex() && inner.defined == IndexRange{0, g.n() - 1};
  GridFunction f(g, std::move(out), convex ? Convexity::Assert : Convexity::Unknown);
  return Transformed(std::move(f), TrustRegion{longest_run(trusted), false, false}, *def);
}

Transformed zero_on(const Grid1D& g) {
  return Transformed(GridFunction(g, std::vector<ExtValue>(g.n(), ExtValue(0.0)), Convexity::Assert));
}

Transformed q_on(const Grid1D& g) { return Transformed(sample(FunctionSpec::half_squared_norm(), g)); }

}  // namespace

const char* to_string(Operator op) {
  switch (op) {
    case Operator::Goebel: return "goebel";
    case Operator::New: return "snew";
    case Operator::Moreau: return "moreau";
  }
  return "?";
}

Transformed goebel(const Transformed& f, SmoothingParam p) {
  const double l = p.lambda();
  return scale_add_q(moreau(f, l), 1.0 - l * l, l);
}

Transformed goebel_via_pav(const Transformed& f, SmoothingParam p) {
  const double l = p.lambda();
  return scale_add_q(prox_average(f, zero_on(f.grid()), 1.0 - l, l), 1.0 + l, l);
}

Transformed goebel_via_scaled_pav(const Transformed& f, SmoothingParam p) {
  const double l = p.lambda();
  const Transformed pav = prox_average(f, q_on(f.grid()), (1.0 - l) / (1.0 + l), 2.0 * l / (1.0 + l));
  return compose(pav, 1.0 / (1.0 + l), (1.0 + l) * (1.0 + l), 0.0);
}

Transformed smooth_new(const Transformed& f, SmoothingParam p) {
  const double l = p.lambda();
  return prox_average(f, q_on(f.grid()), 1.0 - l, l);
}

Transformed smooth_new_via_moreau(const Transformed& f, SmoothingParam p) {
  const double l = p.lambda();
  const double mu = p.mu();
  return compose(moreau(f, mu), 2.0 / (2.0 - l), 1.0 - l, mu);
}

Transformed pav_from_goebel(const Transformed& f, double lam) {
  const SmoothingParam outer(lam);
  const double l = outer.lambda();
  const Transformed g = goebel(f, SmoothingParam(l / (2.0 - l)));
  return compose(g, 2.0 / (2.0 - l), (2.0 - l) * (2.0 - l) / 4.0, 0.0);
}

Transformed apply(Operator op, const Transformed& f, SmoothingParam p) {
  switch (op) {
    case Operator::Goebel: return goebel(f, p);
    case Operator::New: return smooth_new(f, p);
    case Operator::Moreau: return moreau(f, p.lambda());
  }
  throw std::invalid_argument("unknown operator");
}

std::vector<std::pair<std::string, SupDistance>> representation_distances(Operator op, const Transformed& f,
                                                                          SmoothingParam p) {
  std::vector<std::pair<std::string, SupDistance>> out;
  switch (op) {
    case Operator::Goebel: {
      const Transformed def = goebel(f, p);
      const Transformed pav = goebel_via_pav(f, p);
      const Transformed scaled = goebel_via_scaled_pav(f, p);
      out.emplace_back("definition_vs_pav", sup_distance(def, pav));
      out.emplace_back("definition_vs_scaled_pav", sup_distance(def, scaled));
      out.emplace_back("pav_vs_scaled_pav", sup_distance(pav, scaled));
      break;
    }
    case Operator::New:
      out.emplace_back("definition_vs_moreau", sup_distance(smooth_new(f, p), smooth_new_via_moreau(f, p)));
      break;
    case Operator::Moreau:
      out.emplace_back("moreau_vs_dual_identity",
                       sup_distance(moreau(f, p.lambda()), moreau_dual_identity(f, p.lambda())));
      break;
  }
  return out;
}

std::vector<std::pair<std::string, double>> representation_residuals(Operator op, const Transformed& f,
                                                                     SmoothingParam p) {
  std::vector<std::pair<std::string, double>> out;
  for (const auto& [name, d] : representation_distances(op, f, p))
    out.emplace_back(name, d.over ? d.value : std::numeric_limits<double>::infinity());
  return out;
}

SmoothingReport self_duality_check(const Transformed& f, const Transformed& f_star, Operator op, SmoothingParam p) {
  const Transformed tf = apply(op, f, p);
  const Transformed tf_conj = conjugate(tf, DualGrid(f_star.grid()));
  const Transformed t_fstar = apply(op, f_star, p);
  const SupDistance d = sup_distance(tf_conj, t_fstar);
  if (!d.over) throw std::runtime_error("self_duality_check: empty trusted interior");
  SmoothingReport r{op,
                    p.lambda(),
                    d.value,
                    *d.index,
                    f_star.grid().point(*d.index),
                    representation_residuals(op, f, p),
                    *d.over};
  return r;
}

std::vector<ConvergencePoint> convergence_sweep(const Transformed& f, Operator op, std::span<const double> lambdas) {
  for (std::size_t k = 0; k < lambdas.size(); ++k) {
    SmoothingParam{lambdas[k]};
    if (k > 0 && !(lambdas[k] < lambdas[k - 1]))
      throw std::invalid_argument("convergence_sweep: lambdas must be strictly descending");
  }
  std::vector<ConvergencePoint> out;
  for (double l : lambdas) {
    const Transformed t = apply(op, f, SmoothingParam(l));
    double err = 0.0;
    if (t.trusted.range) {
      for (std::size_t i = t.trusted.range->lo; i <= t.trusted.range->hi; ++i) {
        if (!t.defined.contains(i) || f.function[i].is_infinite()) continue;
        err = std::max(err, std::abs(t.function[i].value() - f.function[i].value()));
      }
    }
    out.push_back({l, err});
  }
  return out;
}

double distinctness_check(const Transformed& f, std::span<const double> alphas, std::span<const double> betas) {
  std::vector<Transformed> g, s;
  for (double a : alphas) g.push_back(goebel(f, SmoothingParam(a)));
  for (double b : betas) s.push_back(smooth_new(f, SmoothingParam(b)));
  double best = std::numeric_limits<double>::infinity();
  for (const auto& ga : g)
    for (const auto& sb : s) {
      const SupDistance d = sup_distance(ga, sb);
      if (d.over) best = std::min(best, d.value);
    }
  return best;
}

}  // namespace proxsmooth
