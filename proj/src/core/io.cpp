#include "proxsmooth/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace proxsmooth {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string format_value(double v) {
  if (std::isinf(v) && v > 0) return "inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_real(std::string_view text) {
  text = trim(text);
  if (text == "inf" || text == "+inf") return std::numeric_limits<double>::infinity();
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v))
    throw std::invalid_argument("not a real number: '" + std::string(text) + "'");
  return v;
}

void write_csv(const GridFunction& f, std::ostream& out) {
  out << "x,value\n";
  for (std::size_t i = 0; i < f.size(); ++i) out << format_value(f.x(i)) << ',' << format_value(f[i].value()) << '\n';
}

void write_csv(const GridFunction& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  write_csv(f, out);
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

std::vector<CsvRow> read_csv_rows(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  bool header_seen = false;
  std::vector<CsvRow> rows;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view l = trim(line);
    if (l.empty()) continue;
    if (!header_seen) {
      if (l != "x,value") throw std::invalid_argument("csv line 1: expected header 'x,value'");
      header_seen = true;
      continue;
    }
    const auto comma = l.find(',');
    if (comma == std::string_view::npos)
      throw std::invalid_argument("csv line " + std::to_string(lineno) + ": expected two columns");
    try {
      const double x = parse_real(l.substr(0, comma));
      const double v = parse_real(l.substr(comma + 1));
      if (!std::isfinite(x)) throw std::invalid_argument("x must be finite");
      rows.push_back({x, std::isinf(v) ? ExtValue::infinity() : ExtValue(v)});
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("csv line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!header_seen) throw std::invalid_argument("csv: empty input");
  return rows;
}

std::vector<CsvRow> read_csv_rows(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_csv_rows(in);
}

GridFunction read_grid_function_csv(std::istream& in, Convexity convexity) {
  const auto rows = read_csv_rows(in);
  if (rows.size() < 3) throw std::invalid_argument("csv: a grid needs at least 3 rows");
  const Grid1D grid(rows.front().x, rows.back().x, rows.size());
  std::vector<ExtValue> values;
  values.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (std::abs(rows[i].x - grid.point(i)) > 1e-9 * grid.h())
      throw std::invalid_argument("csv: x column is not a uniform grid (row " + std::to_string(i + 2) + ")");
    values.push_back(rows[i].value);
  }
  return GridFunction(grid, std::move(values), convexity);
}

}  // namespace proxsmooth
