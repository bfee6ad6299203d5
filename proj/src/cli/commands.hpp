#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "proxsmooth/cli.hpp"
#include "proxsmooth/smoothing.hpp"

namespace proxsmooth::cli::detail {

/// Bad arguments or unusable files; maps to exit_usage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Grid1D grid_of(const RunConfig& cfg);
FunctionSpec function_of(const RunConfig& cfg);
Operator operator_of(const std::string& name);

/// Finite reals as numbers, +inf as the string "inf".
nlohmann::json number(double v);

/// {"a", "b", "n"}
nlohmann::json grid_json(const Grid1D& grid);

/// Grid coordinates of the trusted range ends, null when nothing is trusted.
void set_trusted(nlohmann::json& doc, const Grid1D& grid, const std::optional<IndexRange>& range);

void write_function(const GridFunction& f, Format format, std::ostream& out);

/// Writes to cfg.output when set, else to `out`.
void emit_function(const GridFunction& f, const RunConfig& cfg, std::ostream& out);
void emit_json(const nlohmann::json& doc, const RunConfig& cfg, std::ostream& out);
void write_json_file(const nlohmann::json& doc, const std::string& path);
void write_text_file(const std::string& text, const std::string& path);

int cmd_sample(const RunConfig& cfg, std::ostream& out);
int cmd_transform(const std::string& op, const RunConfig& cfg, std::ostream& out);
int cmd_check(const std::string& name, const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace proxsmooth::cli::detail
