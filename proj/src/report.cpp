#include "hyplab/report.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "json.hpp"

namespace hyplab {

std::string format_g12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void Table::row(std::initializer_list<Cell> cells) {
  if (cells.size() != columns.size())
    throw std::logic_error("row width does not match the column count");
  rows.emplace_back(cells);
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string cell_to_csv(const Cell& c) {
  struct V {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(u64 v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_g12(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(const std::string& v) const { return csv_escape(v); }
  };
  return std::visit(V{}, c);
}

nlohmann::ordered_json cell_to_json(const Cell& c) {
  struct V {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(u64 v) const { return v; }
    nlohmann::ordered_json operator()(double v) const {
      if (!std::isfinite(v)) return nullptr;
      // round-trip through the printed form so JSON and CSV agree in content
      return std::stod(format_g12(v));
    }
    nlohmann::ordered_json operator()(bool v) const { return v; }
    nlohmann::ordered_json operator()(const std::string& v) const { return v; }
  };
  return std::visit(V{}, c);
}

}  // namespace

std::string to_csv(const Report& r) {
  std::string out;
  for (size_t i = 0; i < r.table.columns.size(); ++i) {
    if (i) out += ',';
    out += csv_escape(r.table.columns[i]);
  }
  out += '\n';
  for (const auto& row : r.table.rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += cell_to_csv(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["params"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.params) j["params"][k] = cell_to_json(v);
  j["results"] = nlohmann::ordered_json::array();
  const bool scalar = r.json_scalar_rows && r.table.columns.size() == 1;
  for (const auto& row : r.table.rows) {
    if (scalar) {
      j["results"].push_back(cell_to_json(row[0]));
      continue;
    }
    nlohmann::ordered_json o = nlohmann::ordered_json::object();
    for (size_t i = 0; i < row.size(); ++i) o[r.table.columns[i]] = cell_to_json(row[i]);
    j["results"].push_back(std::move(o));
  }
  j["timing_ms"] = nullptr;
  return j.dump(2) + "\n";
}

}  // namespace hyplab
