#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "proxsmooth/grid_function.hpp"

namespace proxsmooth {

/// 17 significant digits (round-trips every double); "inf" for +inf.
std::string format_value(double v);

/// Parses a decimal real or the literal "inf". Throws std::invalid_argument.
double parse_real(std::string_view text);

/// Header `x,value`, one row per grid point.
void write_csv(const GridFunction& f, std::ostream& out);
void write_csv(const GridFunction& f, const std::string& path);

struct CsvRow {
  double x;
  ExtValue value;
};

/// Reads `x,value` rows (header required). Errors carry the line number.
std::vector<CsvRow> read_csv_rows(std::istream& in);
std::vector<CsvRow> read_csv_rows(const std::string& path);

/// Rebuilds a GridFunction; the x column must be a uniform grid.
GridFunction read_grid_function_csv(std::istream& in, Convexity convexity = Convexity::Unknown);

}  // namespace proxsmooth
