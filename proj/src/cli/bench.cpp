#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "commands.hpp"
#include "proxsmooth/transforms.hpp"

namespace proxsmooth::cli {

namespace {

// Minimum wall time of one call, repeating until at least `min_reps` calls
// and `budget` seconds have been spent.
template <class F>
double min_time(F&& call, int min_reps, double budget) {
  using clock = std::chrono::steady_clock;
  double best = INFINITY, total = 0.0;
  for (int reps = 0; reps < min_reps || (total < budget && reps < 100000); ++reps) {
    const auto t0 = clock::now();
    call();
    const double s = std::chrono::duration<double>(clock::now() - t0).count();
    best = std::min(best, s);
    total += s;
  }
  return best;
}

double max_diff(const GridFunction& a, const GridFunction& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_infinite() && b[i].is_infinite()) continue;
    if (a[i].is_infinite() || b[i].is_infinite()) return INFINITY;
    m = std::max(m, std::abs(a[i].value() - b[i].value()));
  }
  return m;
}

}  // namespace

double scaled_tolerance(double base, const Grid1D& grid) { return base * grid.h() / reference_h; }

std::vector<std::size_t> default_bench_sizes() {
  std::vector<std::size_t> out;
  for (std::size_t n = 1 << 10; n <= (1 << 20); n *= 2) out.push_back(n);
  return out;
}

std::vector<BenchRow> bench(const FunctionSpec& spec, double a, double b, double lambda,
                            const std::vector<std::size_t>& sizes, std::size_t brute_max) {
  std::vector<Transformed> inputs;
  std::vector<DualGrid> duals;
  std::vector<BenchRow> rows;
  for (std::size_t n : sizes) {
    inputs.emplace_back(sample(spec, Grid1D(a, b, n)));
    duals.push_back(DualGrid::automatic(inputs.back().function));
    BenchRow row;
    row.n = n;
    row.conjugate_fast_s = row.moreau_fast_s = INFINITY;
    if (n <= brute_max) {
      const Transformed& f = inputs.back();
      const Transformed fast = conjugate(f, duals.back());
      std::optional<Transformed> brute;
      row.conjugate_brute_s = min_time([&] { brute = conjugate_bruteforce(f, duals.back()); }, 1, 0.05);
      row.conjugate_max_diff = max_diff(fast.function, brute->function);
      const Transformed env = moreau(f, lambda);
      row.moreau_brute_s = min_time([&] { brute = moreau(f, lambda, MoreauMethod::BruteForce); }, 1, 0.05);
      row.moreau_max_diff = max_diff(env.function, brute->function);
    }
    rows.push_back(row);
  }
  // interleaved rounds keep slow drift in machine load from biasing one size
  for (int round = 0; round < 5; ++round) {
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const Transformed& f = inputs[k];
      rows[k].conjugate_fast_s =
          std::min(rows[k].conjugate_fast_s, min_time([&] { (void)conjugate(f, duals[k]); }, 2, 0.01));
      rows[k].moreau_fast_s = std::min(rows[k].moreau_fast_s, min_time([&] { (void)moreau(f, lambda); }, 2, 0.01));
    }
  }
  for (std::size_t k = 1; k < rows.size(); ++k)
    if (rows[k - 1].n * 2 == rows[k].n) rows[k].conjugate_ratio = rows[k].conjugate_fast_s / rows[k - 1].conjugate_fast_s;
  return rows;
}

namespace detail {

namespace {

std::string cell(const std::optional<double>& v) {
  if (!v) return "";
  std::ostringstream s;
  s << std::scientific << std::setprecision(6) << *v;
  return s.str();
}

}  // namespace

int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const FunctionSpec spec = parse_function_spec(cfg.function.empty() ? "norm" : cfg.function);
  if (!(cfg.lambda > 0.0)) throw UsageError("bench needs lambda > 0");
  if (cfg.brute_max < 0) throw UsageError("--brute-max must be nonnegative");
  std::vector<std::size_t> sizes;
  for (std::int64_t n : cfg.sizes) {
    if (n < 3) throw UsageError("bench sizes must be at least 3");
    sizes.push_back(static_cast<std::size_t>(n));
  }
  if (sizes.empty()) sizes = default_bench_sizes();
  make_grid(cfg.a, cfg.b, 3);

  const auto rows = bench(spec, cfg.a, cfg.b, cfg.lambda, sizes, static_cast<std::size_t>(cfg.brute_max));

  bool agree = true;
  for (const auto& r : rows)
    for (const auto& d : {r.conjugate_max_diff, r.moreau_max_diff})
      if (d && !(*d <= 1e-12)) {
        agree = false;
        err << "FAIL bench: fast and brute force differ by " << cell(d) << " at n = " << r.n << '\n';
      }

  if (cfg.format == Format::Json) {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& r : rows) {
      auto opt = [](const std::optional<double>& v) { return v ? number(*v) : nlohmann::json(nullptr); };
      doc.push_back({{"n", r.n},
                     {"conjugate_fast_s", r.conjugate_fast_s},
                     {"conjugate_brute_s", opt(r.conjugate_brute_s)},
                     {"conjugate_max_diff", opt(r.conjugate_max_diff)},
                     {"moreau_fast_s", r.moreau_fast_s},
                     {"moreau_brute_s", opt(r.moreau_brute_s)},
                     {"moreau_max_diff", opt(r.moreau_max_diff)},
                     {"conjugate_ratio", opt(r.conjugate_ratio)}});
    }
    emit_json(doc, cfg, out);
  } else {
    std::ostringstream csv;
    csv << "n,conjugate_fast_s,conjugate_brute_s,conjugate_max_diff,moreau_fast_s,moreau_brute_s,moreau_max_diff,"
           "conjugate_ratio\n";
    for (const auto& r : rows)
      csv << r.n << ',' << cell(r.conjugate_fast_s) << ',' << cell(r.conjugate_brute_s) << ','
          << cell(r.conjugate_max_diff) << ',' << cell(r.moreau_fast_s) << ',' << cell(r.moreau_brute_s) << ','
          << cell(r.moreau_max_diff) << ',' << cell(r.conjugate_ratio) << '\n';
    if (cfg.output)
      write_text_file(csv.str(), *cfg.output);
    else
      out << csv.str();
  }
  return agree ? exit_pass : exit_failure;
}

}  // namespace detail

}  // namespace proxsmooth::cli
