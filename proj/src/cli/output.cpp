#include <cmath>
#include <fstream>
#include <ostream>

#include "commands.hpp"
#include "proxsmooth/io.hpp"

namespace proxsmooth::cli::detail {

Grid1D grid_of(const RunConfig& cfg) { return make_grid(cfg.a, cfg.b, cfg.n); }

FunctionSpec function_of(const RunConfig& cfg) {
  if (cfg.function.empty()) throw UsageError("a function is required (-f)");
  return parse_function_spec(cfg.function);
}

Operator operator_of(const std::string& name) {
  if (name == "goebel") return Operator::Goebel;
  if (name == "snew") return Operator::New;
  if (name == "moreau") return Operator::Moreau;
  throw UsageError("unknown operator '" + name + "' (expected goebel, snew, moreau)");
}

nlohmann::json number(double v) {
  if (std::isnan(v)) return nullptr;
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

nlohmann::json grid_json(const Grid1D& grid) { return {{"a", grid.a()}, {"b", grid.b()}, {"n", grid.n()}}; }

void set_trusted(nlohmann::json& doc, const Grid1D& grid, const std::optional<IndexRange>& range) {
  doc["trusted_lo"] = range ? nlohmann::json(grid.point(range->lo)) : nlohmann::json(nullptr);
  doc["trusted_hi"] = range ? nlohmann::json(grid.point(range->hi)) : nlohmann::json(nullptr);
}

void write_function(const GridFunction& f, Format format, std::ostream& out) {
  if (format == Format::Csv) {
    write_csv(f, out);
    return;
  }
  nlohmann::json xs = nlohmann::json::array(), vs = nlohmann::json::array();
  for (std::size_t i = 0; i < f.size(); ++i) {
    xs.push_back(f.x(i));
    vs.push_back(f[i].is_infinite() ? nlohmann::json("inf") : nlohmann::json(f[i].value()));
  }
  out << nlohmann::json{{"x", xs}, {"value", vs}}.dump(2) << '\n';
}

namespace {

template <class Write>
void to_file(const std::string& path, Write&& write) {
  std::ofstream file(path);
  if (!file) throw UsageError("cannot open '" + path + "' for writing");
  write(file);
  file.flush();
  if (!file) throw UsageError("write to '" + path + "' failed");
}

}  // namespace

void emit_function(const GridFunction& f, const RunConfig& cfg, std::ostream& out) {
  if (cfg.output)
    to_file(*cfg.output, [&](std::ostream& o) { write_function(f, cfg.format, o); });
  else
    write_function(f, cfg.format, out);
}

void emit_json(const nlohmann::json& doc, const RunConfig& cfg, std::ostream& out) {
  if (cfg.output)
    write_json_file(doc, *cfg.output);
  else
    out << doc.dump(2) << '\n';
}

void write_json_file(const nlohmann::json& doc, const std::string& path) {
  to_file(path, [&](std::ostream& o) { o << doc.dump(2) << '\n'; });
}

void write_text_file(const std::string& text, const std::string& path) {
  to_file(path, [&](std::ostream& o) { o << text; });
}

}  // namespace proxsmooth::cli::detail
