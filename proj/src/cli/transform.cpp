#include <ostream>

#include "commands.hpp"
#include "proxsmooth/transforms.hpp"

namespace proxsmooth::cli::detail {

int cmd_sample(const RunConfig& cfg, std::ostream& out) {
  emit_function(sample(function_of(cfg), grid_of(cfg)), cfg, out);
  return exit_pass;
}

int cmd_transform(const std::string& op, const RunConfig& cfg, std::ostream& out) {
  const Grid1D grid = grid_of(cfg);
  const Transformed f(sample(function_of(cfg), grid));

  nlohmann::json residuals = nlohmann::json::object();
  nlohmann::json lambda = cfg.lambda;
  std::optional<Transformed> result;
  if (op == "conjugate") {
    result = conjugate(f, DualGrid::automatic(f.function));
    residuals["fenchel_young"] = number(fenchel_young_residual(f.function, result->function));
    lambda = nullptr;
  } else if (op == "moreau") {
    if (!(cfg.lambda > 0.0)) throw UsageError("moreau needs lambda > 0");
    result = moreau(f, cfg.lambda);
    const SupDistance d = sup_distance(*result, moreau_dual_identity(f, cfg.lambda));
    residuals["moreau_vs_dual_identity"] = number(d.over ? d.value : INFINITY);
  } else if (op == "proxavg") {
    const SmoothingParam p(cfg.lambda);
    const Transformed g(sample(parse_function_spec(cfg.second), grid));
    result = prox_average(f, g, 1.0 - p.lambda(), p.lambda());
  } else {
    const Operator o = operator_of(op);
    const SmoothingParam p(cfg.lambda);
    result = apply(o, f, p);
    for (const auto& [name, value] : representation_residuals(o, f, p)) residuals[name] = number(value);
  }

  emit_function(result->function, cfg, out);

  nlohmann::json sidecar = {{"operator", op}, {"lambda", lambda}, {"grid", grid_json(grid)}};
  set_trusted(sidecar, grid_of(cfg), result->trusted.range);
  sidecar["residuals"] = residuals;
  if (op == "conjugate") {
    // the conjugate lives on its own dual grid
    sidecar["grid"] = grid_json(result->grid());
    set_trusted(sidecar, result->grid(), result->trusted.range);
  }
  if (cfg.sidecar)
    write_json_file(sidecar, *cfg.sidecar);
  else if (cfg.output)
    write_json_file(sidecar, *cfg.output + ".sidecar.json");
  return exit_pass;
}

}  // namespace proxsmooth::cli::detail
