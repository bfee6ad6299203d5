#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "proxsmooth/function_spec.hpp"
#include "proxsmooth/grid.hpp"

namespace proxsmooth::cli {

inline constexpr int exit_pass = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;

enum class Format { Csv, Json };

struct RunConfig {
  double a = -4.0;
  double b = 4.0;
  std::int64_t n = 4097;
  double lambda = 0.5;
  std::string function;
  std::string second = "q";
  std::string op = "goebel";
  std::optional<std::string> output;
  std::optional<std::string> sidecar;
  Format format = Format::Csv;
  std::optional<double> tolerance;
  std::optional<double> expect_fail_below;
  std::vector<double> lambdas = {0.4, 0.2, 0.1, 0.05};
  std::vector<std::int64_t> sizes;
  std::int64_t brute_max = 16384;
};

/// Reference spacing 8/4096 of the window [-4, 4] with 4097 points.
inline constexpr double reference_h = 8.0 / 4096.0;

/// Default tolerances are stated at the reference spacing and grow linearly
/// with h.
double scaled_tolerance(double base, const Grid1D& grid);

struct BenchRow {
  std::size_t n = 0;
  double conjugate_fast_s = 0.0;
  double moreau_fast_s = 0.0;
  /// Brute-force columns are present for n <= brute_max.
  std::optional<double> conjugate_brute_s;
  std::optional<double> conjugate_max_diff;
  std::optional<double> moreau_brute_s;
  std::optional<double> moreau_max_diff;
  /// Fast conjugate time over the previous row's, when n doubled.
  std::optional<double> conjugate_ratio;
};

/// Fast vs brute-force conjugate and Moreau envelope of `f` on [a, b] for
/// each size. Timings are the minimum over repetitions.
std::vector<BenchRow> bench(const FunctionSpec& f, double a, double b, double lambda,
                            const std::vector<std::size_t>& sizes, std::size_t brute_max);

/// Sizes 2^10 .. 2^20.
std::vector<std::size_t> default_bench_sizes();

/// Parses argv-style arguments (without the program name) and runs one
/// subcommand. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace proxsmooth::cli
