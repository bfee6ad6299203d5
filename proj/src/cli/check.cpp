#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

#include "commands.hpp"
#include "proxsmooth/oracles.hpp"

namespace proxsmooth::cli::detail {

namespace {

std::string show(double v) {
  std::ostringstream s;
  s.precision(6);
  s << v;
  return s.str();
}

struct Outcome {
  nlohmann::json residuals = nlohmann::json::object();
  std::optional<IndexRange> trusted;
  std::optional<Grid1D> trusted_grid;
  double tolerance = 0.0;
  bool pass = false;
  nlohmann::json worst = nullptr;
  std::string message;
};

double tolerance_or(const RunConfig& cfg, double base, const Grid1D& grid) {
  return cfg.tolerance ? *cfg.tolerance : scaled_tolerance(base, grid);
}

// Fills the worst point from a sup distance and judges it against the tolerance.
void judge(Outcome& o, const std::string& what, const SupDistance& d, const Grid1D& grid) {
  if (!d.over) {
    o.pass = false;
    o.message = what + ": no trusted point to compare";
    return;
  }
  const double x = grid.point(*d.index);
  o.worst = {{"x", x}, {"residual", number(d.value)}};
  o.pass = d.value <= o.tolerance;
  if (!o.pass)
    o.message = what + ": residual " + show(d.value) + " at x = " + show(x) + " exceeds tolerance " + show(o.tolerance);
}

Transformed closed_form_or_numerical_conjugate(const FunctionSpec& spec, const Transformed& f, const Grid1D& grid) {
  if (const auto cs = conjugate_spec(spec)) {
    try {
      return Transformed(sample(*cs, grid));
    } catch (const std::invalid_argument&) {
      // the closed form's domain misses every grid point
    }
  }
  return conjugate(f, DualGrid(grid));
}

Outcome self_dual(const RunConfig& cfg, Operator op) {
  const Grid1D grid = grid_of(cfg);
  const FunctionSpec spec = function_of(cfg);
  const Transformed f(sample(spec, grid));
  const Transformed f_star = closed_form_or_numerical_conjugate(spec, f, grid);
  const SmoothingReport r = self_duality_check(f, f_star, op, SmoothingParam(cfg.lambda));

  Outcome o;
  o.trusted = r.trusted_interior;
  o.trusted_grid = f_star.grid();
  o.residuals["self_dual"] = number(r.self_dual_residual);
  for (const auto& [name, value] : r.representation_residuals) o.residuals[name] = number(value);
  o.worst = {{"x", r.worst_x}, {"residual", number(r.self_dual_residual)}};
  if (cfg.expect_fail_below) {
    o.tolerance = *cfg.expect_fail_below;
    o.pass = r.self_dual_residual >= o.tolerance;
    if (!o.pass)
      o.message = "self-dual: residual " + show(r.self_dual_residual) + " at x = " + show(r.worst_x) +
                  " is below the expected minimum " + show(o.tolerance);
  } else {
    o.tolerance = tolerance_or(cfg, 5e-3, grid);
    o.pass = r.self_dual_residual <= o.tolerance;
    if (!o.pass)
      o.message = "self-dual: residual " + show(r.self_dual_residual) + " at x = " + show(r.worst_x) +
                  " exceeds tolerance " + show(o.tolerance);
  }
  return o;
}

Outcome representations(const RunConfig& cfg, Operator op) {
  const Grid1D grid = grid_of(cfg);
  const Transformed f(sample(function_of(cfg), grid));
  Outcome o;
  o.tolerance = tolerance_or(cfg, 5e-3, grid);
  o.pass = true;
  double worst = -1.0;
  for (const auto& [name, d] : representation_distances(op, f, SmoothingParam(cfg.lambda))) {
    const double v = d.over ? d.value : std::numeric_limits<double>::infinity();
    o.residuals[name] = number(v);
    if (v > worst) {
      worst = v;
      Outcome one;
      one.tolerance = o.tolerance;
      judge(one, "representations (" + name + ")", d, grid);
      o.worst = one.worst;
      o.trusted = d.over;
      o.trusted_grid = grid;
      if (!one.pass) {
        o.pass = false;
        o.message = one.message;
      }
    }
  }
  return o;
}

Outcome oracle(const RunConfig& cfg, Operator op) {
  const Grid1D grid = grid_of(cfg);
  const FunctionSpec spec = function_of(cfg);
  const SmoothingParam p(cfg.lambda);
  const bool is_norm = std::holds_alternative<spec::Norm>(spec.kind());
  const auto* ball = std::get_if<spec::IndicatorBall>(&spec.kind());
  const bool is_unit_ball = ball && ball->radius == 1.0;

  double (*closed)(oracles::RadialQuery) = nullptr;
  if (is_norm && op == Operator::Moreau) closed = oracles::norm_moreau;
  if (is_norm && op == Operator::Goebel) closed = oracles::norm_goebel;
  if (is_norm && op == Operator::New) closed = oracles::norm_new;
  if (is_unit_ball && op == Operator::Moreau) closed = oracles::norm_conj_moreau;
  if (!closed) throw UsageError("no closed form for " + spec.to_string() + " under " + to_string(op));

  const Transformed t = apply(op, Transformed(sample(spec, grid)), p);
  Outcome o;
  o.tolerance = tolerance_or(cfg, op == Operator::New ? 5e-3 : 1e-4, grid);
  o.trusted = t.trusted.range;
  o.trusted_grid = grid;
  SupDistance d;
  if (t.trusted.range) {
    for (std::size_t i = t.trusted.range->lo; i <= t.trusted.range->hi; ++i) {
      if (!t.defined.contains(i)) continue;
      const double e = std::abs(t.function[i].value() - closed({std::abs(grid.point(i)), p.lambda()}));
      if (!d.index || e > d.value) {
        d.value = e;
        d.index = i;
      }
    }
  }
  if (d.index) d.over = t.trusted.range;
  o.residuals["oracle"] = number(d.value);
  judge(o, "oracle", d, grid);
  return o;
}

Outcome converse(const RunConfig& cfg) {
  const Grid1D grid = grid_of(cfg);
  const Transformed f(sample(function_of(cfg), grid));
  const double l = SmoothingParam(cfg.lambda).lambda();
  const Transformed lhs = prox_average(f, Transformed(sample(FunctionSpec::half_squared_norm(), grid)), 1.0 - l, l);
  const SupDistance d = sup_distance(lhs, pav_from_goebel(f, l));
  Outcome o;
  o.tolerance = tolerance_or(cfg, 5e-3, grid);
  o.trusted = d.over;
  o.trusted_grid = grid;
  o.residuals["converse"] = number(d.over ? d.value : std::numeric_limits<double>::infinity());
  judge(o, "converse", d, grid);
  return o;
}

Outcome convergence(const RunConfig& cfg, Operator op) {
  const Grid1D grid = grid_of(cfg);
  const Transformed f(sample(function_of(cfg), grid));
  const auto sweep = convergence_sweep(f, op, cfg.lambdas);
  Outcome o;
  o.tolerance = cfg.tolerance.value_or(0.5);
  o.pass = true;
  nlohmann::json errors = nlohmann::json::array();
  for (std::size_t k = 0; k < sweep.size(); ++k) {
    errors.push_back({{"lambda", sweep[k].lambda}, {"sup_error", number(sweep[k].sup_error)}});
    if (o.pass && k > 0 && !(sweep[k].sup_error < sweep[k - 1].sup_error)) {
      o.pass = false;
      o.worst = {{"lambda", sweep[k].lambda}, {"residual", number(sweep[k].sup_error)}};
      o.message = "convergence: error " + show(sweep[k].sup_error) + " at lambda = " + show(sweep[k].lambda) +
                  " does not decrease from " + show(sweep[k - 1].sup_error);
    }
  }
  o.residuals["errors"] = errors;
  if (!sweep.empty()) {
    const auto& last = sweep.back();
    if (o.worst.is_null()) o.worst = {{"lambda", last.lambda}, {"residual", number(last.sup_error)}};
    if (o.pass && !(last.sup_error <= o.tolerance)) {
      o.pass = false;
      o.message = "convergence: final error " + show(last.sup_error) + " at lambda = " + show(last.lambda) +
                  " exceeds tolerance " + show(o.tolerance);
    }
  }
  return o;
}

Outcome distinct(const RunConfig& cfg) {
  const Grid1D grid = grid_of(cfg);
  const Transformed f(sample(function_of(cfg), grid));
  const std::vector<double> params = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  const double gap = distinctness_check(f, params, params);
  Outcome o;
  o.tolerance = cfg.tolerance.value_or(1e-3);
  o.residuals["min_gap"] = number(gap);
  o.pass = gap > o.tolerance;
  if (!o.pass) {
    for (double a : params)
      for (double b : params)
        if (o.worst.is_null() && distinctness_check(f, std::span(&a, 1), std::span(&b, 1)) == gap)
          o.worst = {{"alpha", a}, {"beta", b}, {"residual", number(gap)}};
    o.message = "distinct: minimum gap " + show(gap) + " does not exceed " + show(o.tolerance);
    if (!o.worst.is_null())
      o.message += " (alpha = " + show(o.worst["alpha"].get<double>()) +
                   ", beta = " + show(o.worst["beta"].get<double>()) + ")";
  }
  return o;
}

}  // namespace

int cmd_check(const std::string& name, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.expect_fail_below && name != "self-dual") throw UsageError("--expect-fail-below applies to self-dual only");
  const bool uses_op = name == "self-dual" || name == "representations" || name == "oracle" || name == "convergence";
  const Operator op = operator_of(cfg.op);
  SmoothingParam{cfg.lambda};

  Outcome o;
  if (name == "self-dual")
    o = self_dual(cfg, op);
  else if (name == "representations")
    o = representations(cfg, op);
  else if (name == "oracle")
    o = oracle(cfg, op);
  else if (name == "converse")
    o = converse(cfg);
  else if (name == "convergence")
    o = convergence(cfg, op);
  else if (name == "distinct")
    o = distinct(cfg);
  else
    throw UsageError("unknown check '" + name + "'");

  const Grid1D grid = grid_of(cfg);
  nlohmann::json doc = {{"check", name},
                        {"operator", uses_op ? nlohmann::json(to_string(op)) : nlohmann::json(nullptr)},
                        {"lambda", name == "convergence" || name == "distinct" ? nlohmann::json(nullptr)
                                                                                : nlohmann::json(cfg.lambda)},
                        {"grid", grid_json(grid)}};
  set_trusted(doc, o.trusted_grid.value_or(grid), o.trusted);
  doc["residuals"] = o.residuals;
  doc["tolerance"] = o.tolerance;
  doc["worst"] = o.worst;
  doc["pass"] = o.pass;
  emit_json(doc, cfg, out);
  if (!o.pass) err << "FAIL " << o.message << '\n';
  return o.pass ? exit_pass : exit_failure;
}

}  // namespace proxsmooth::cli::detail
