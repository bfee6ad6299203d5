#include <CLI11.hpp>
#include <ostream>

#include "commands.hpp"

namespace proxsmooth::cli {

namespace {

void add_grid(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("-a", cfg.a, "window start")->capture_default_str();
  cmd->add_option("-b", cfg.b, "window end")->capture_default_str();
  cmd->add_option("-n", cfg.n, "grid points")->capture_default_str();
}

void add_output(CLI::App* cmd, RunConfig& cfg, std::string& format) {
  cmd->add_option("-o,--output", cfg.output, "output path (default: standard output)");
  cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Discrete conjugates, Moreau envelopes, proximal averages and self-dual smoothing on 1-D grids"};
  app.name("proxsmooth");
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = "csv";
  std::string transform_op;
  std::string check_name;
  const std::string function_help = "norm | q | ind_ball:r=<R> | affine:m=<m>,c=<c> | pwl:<path.csv> | scaled:<k>:<spec>";

  CLI::App* sample = app.add_subcommand("sample", "sample a function on the grid");
  sample->add_option("-f,--function", cfg.function, function_help)->required();
  add_grid(sample, cfg);
  add_output(sample, cfg, format);

  CLI::App* transform = app.add_subcommand("transform", "apply a transform and write the result");
  transform->add_option("op", transform_op, "operation")
      ->required()
      ->check(CLI::IsMember({"conjugate", "moreau", "proxavg", "goebel", "snew"}));
  transform->add_option("-f,--function", cfg.function, function_help)->required();
  transform->add_option("-g,--second", cfg.second, "second function of proxavg")->capture_default_str();
  transform->add_option("-l,--lambda", cfg.lambda, "smoothing parameter")->capture_default_str();
  transform->add_option("--sidecar", cfg.sidecar, "metadata path (default: <output>.sidecar.json)");
  add_grid(transform, cfg);
  add_output(transform, cfg, format);

  CLI::App* check = app.add_subcommand("check", "verify an identity; exit 0 on pass, 1 on failure");
  check->add_option("name", check_name, "check")
      ->required()
      ->check(CLI::IsMember({"self-dual", "representations", "oracle", "converse", "convergence", "distinct"}));
  check->add_option("-f,--function", cfg.function, function_help)->required();
  check->add_option("--op", cfg.op, "goebel | snew | moreau")->capture_default_str();
  check->add_option("-l,--lambda", cfg.lambda, "smoothing parameter")->capture_default_str();
  check->add_option("--lambdas", cfg.lambdas, "descending parameters for convergence")->delimiter(',');
  check->add_option("--tol", cfg.tolerance, "tolerance override (not scaled with h)");
  check->add_option("--expect-fail-below", cfg.expect_fail_below,
                    "self-dual passes when the residual is at least this value");
  add_grid(check, cfg);
  check->add_option("-o,--output", cfg.output, "report path (default: standard output)");

  CLI::App* bench = app.add_subcommand("bench", "time fast and brute-force transforms");
  bench->add_option("-f,--function", cfg.function, "function to transform (default: norm)");
  bench->add_option("-l,--lambda", cfg.lambda, "Moreau parameter")->capture_default_str();
  bench->add_option("--sizes", cfg.sizes, "grid sizes (default: 2^10 .. 2^20)")->delimiter(',');
  bench->add_option("--brute-max", cfg.brute_max, "largest size run by brute force")->capture_default_str();
  bench->add_option("-a", cfg.a, "window start")->capture_default_str();
  bench->add_option("-b", cfg.b, "window end")->capture_default_str();
  add_output(bench, cfg, format);

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_pass : exit_usage;
  }
  cfg.format = format == "json" ? Format::Json : Format::Csv;

  try {
    if (*sample) return detail::cmd_sample(cfg, out);
    if (*transform) return detail::cmd_transform(transform_op, cfg, out);
    if (*check) return detail::cmd_check(check_name, cfg, out, err);
    return detail::cmd_bench(cfg, out, err);
  } catch (const detail::UsageError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_failure;
  }
}

}  // namespace proxsmooth::cli
