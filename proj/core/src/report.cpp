#include <charconv>
#include <cmath>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <system_error>

#include "speclab/errors.hpp"
#include "speclab/harness.hpp"

#ifndef SPECLAB_VERSION
#define SPECLAB_VERSION "0.0.0"
#endif

namespace speclab {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json number_to_json(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

double number_from_json(const ordered_json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
  }
  throw DomainError("report JSON: expected a number");
}

bool is_nonfinite_token(const std::string& s) { return s == "nan" || s == "inf" || s == "-inf"; }

bool same_number(double a, double b) { return (std::isnan(a) && std::isnan(b)) || a == b; }

bool same_cell(const Cell& a, const Cell& b) {
  if (a.index() != b.index()) return false;
  if (std::holds_alternative<double>(a)) return same_number(std::get<double>(a), std::get<double>(b));
  return std::get<std::string>(a) == std::get<std::string>(b);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

const char* tool_version() { return SPECLAB_VERSION; }

bool ExperimentReport::all_passed() const {
  for (const auto& v : verdicts) {
    if (!v.passed) return false;
  }
  return true;
}

const Table* ExperimentReport::table(const std::string& name) const {
  for (const auto& t : tables) {
    if (t.name == name) return &t;
  }
  return nullptr;
}

bool operator==(const ExperimentReport& a, const ExperimentReport& b) {
  if (a.schema_version != b.schema_version || a.tool_version != b.tool_version || a.experiment != b.experiment ||
      a.config_echo != b.config_echo || a.warnings != b.warnings) {
    return false;
  }
  if (a.verdicts.size() != b.verdicts.size() || a.tables.size() != b.tables.size()) return false;
  for (std::size_t i = 0; i < a.verdicts.size(); ++i) {
    const auto& x = a.verdicts[i];
    const auto& y = b.verdicts[i];
    if (x.name != y.name || x.inequality != y.inequality || x.anchor != y.anchor || x.passed != y.passed ||
        x.values.size() != y.values.size()) {
      return false;
    }
    for (std::size_t k = 0; k < x.values.size(); ++k) {
      if (x.values[k].first != y.values[k].first || !same_number(x.values[k].second, y.values[k].second)) return false;
    }
  }
  for (std::size_t i = 0; i < a.tables.size(); ++i) {
    const auto& x = a.tables[i];
    const auto& y = b.tables[i];
    if (x.name != y.name || x.columns != y.columns || x.rows.size() != y.rows.size()) return false;
    for (std::size_t r = 0; r < x.rows.size(); ++r) {
      if (x.rows[r].size() != y.rows[r].size()) return false;
      for (std::size_t c = 0; c < x.rows[r].size(); ++c) {
        if (!same_cell(x.rows[r][c], y.rows[r][c])) return false;
      }
    }
  }
  if (a.failure.has_value() != b.failure.has_value()) return false;
  if (a.failure && (a.failure->kind != b.failure->kind || a.failure->message != b.failure->message)) return false;
  return same_number(a.run_info.wall_time_s, b.run_info.wall_time_s) && a.run_info.timestamp == b.run_info.timestamp;
}

std::string report_to_json(const ExperimentReport& report, bool include_run_info) {
  ordered_json j;
  j["schema_version"] = report.schema_version;
  j["tool_version"] = report.tool_version;
  j["experiment"] = report.experiment;
  j["config"] = report.config_echo.empty() ? ordered_json::object() : ordered_json::parse(report.config_echo);
  ordered_json verdicts = ordered_json::array();
  for (const auto& v : report.verdicts) {
    ordered_json values = ordered_json::object();
    for (const auto& [key, value] : v.values) values[key] = number_to_json(value);
    verdicts.push_back({{"name", v.name},
                        {"inequality", v.inequality},
                        {"anchor", v.anchor},
                        {"passed", v.passed},
                        {"values", values}});
  }
  j["verdicts"] = verdicts;
  ordered_json tables = ordered_json::array();
  for (const auto& t : report.tables) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : t.rows) {
      ordered_json out = ordered_json::array();
      for (const auto& cell : row) {
        if (std::holds_alternative<double>(cell)) {
          out.push_back(number_to_json(std::get<double>(cell)));
        } else {
          out.push_back(std::get<std::string>(cell));
        }
      }
      rows.push_back(out);
    }
    tables.push_back({{"name", t.name}, {"columns", t.columns}, {"rows", rows}});
  }
  j["tables"] = tables;
  j["warnings"] = report.warnings;
  if (report.failure) {
    j["failure"] = {{"kind", report.failure->kind}, {"message", report.failure->message}};
  } else {
    j["failure"] = nullptr;
  }
  if (include_run_info) {
    j["run_info"] = {{"wall_time_s", number_to_json(report.run_info.wall_time_s)},
                     {"timestamp", report.run_info.timestamp}};
  }
  return j.dump(2) + "\n";
}

ExperimentReport report_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("report JSON: ") + e.what());
  }
  ExperimentReport r;
  try {
    r.schema_version = j.at("schema_version").get<int>();
    if (r.schema_version != 1) throw DomainError("report JSON: unsupported schema_version");
    r.tool_version = j.at("tool_version").get<std::string>();
    r.experiment = j.at("experiment").get<std::string>();
    const auto& config = j.at("config");
    r.config_echo = config.dump();
    for (const auto& v : j.at("verdicts")) {
      Verdict out;
      out.name = v.at("name").get<std::string>();
      out.inequality = v.at("inequality").get<std::string>();
      out.anchor = v.at("anchor").get<std::string>();
      out.passed = v.at("passed").get<bool>();
      for (const auto& [key, value] : v.at("values").items()) out.values.emplace_back(key, number_from_json(value));
      r.verdicts.push_back(std::move(out));
    }
    for (const auto& t : j.at("tables")) {
      Table out;
      out.name = t.at("name").get<std::string>();
      out.columns = t.at("columns").get<std::vector<std::string>>();
      for (const auto& row : t.at("rows")) {
        std::vector<Cell> cells;
        for (const auto& cell : row) {
          if (cell.is_number() || (cell.is_string() && is_nonfinite_token(cell.get<std::string>()))) {
            cells.emplace_back(number_from_json(cell));
          } else {
            cells.emplace_back(cell.get<std::string>());
          }
        }
        out.rows.push_back(std::move(cells));
      }
      r.tables.push_back(std::move(out));
    }
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    if (!j.at("failure").is_null()) {
      r.failure = Failure{j["failure"].at("kind").get<std::string>(), j["failure"].at("message").get<std::string>()};
    }
    if (j.contains("run_info")) {
      r.run_info.wall_time_s = number_from_json(j["run_info"].at("wall_time_s"));
      r.run_info.timestamp = j["run_info"].at("timestamp").get<std::string>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("report JSON: ") + e.what());
  }
  return r;
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string table_to_csv(const Table& table) {
  std::string out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out += ',';
    out += csv_escape(table.columns[c]);
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      if (std::holds_alternative<double>(row[c])) {
        out += format_number(std::get<double>(row[c]));
      } else {
        out += csv_escape(std::get<std::string>(row[c]));
      }
    }
    out += '\n';
  }
  return out;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& text) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (path.has_parent_path()) {
    fs::create_directories(path.parent_path(), ec);
    if (ec) throw IoError("cannot create directory " + path.parent_path().string() + ": " + ec.message());
  }
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
    out << text;
    out.flush();
    if (!out) {
      out.close();
      fs::remove(tmp, ec);
      throw IoError("write failed for " + tmp.string());
    }
  }
  fs::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignore;
    fs::remove(tmp, ignore);
    throw IoError("cannot rename " + tmp.string() + " to " + path.string() + ": " + ec.message());
  }
}

void emit_report(const ExperimentReport& report, const std::filesystem::path& dir) {
  for (const auto& table : report.tables) write_file_atomic(dir / (table.name + ".csv"), table_to_csv(table));
  write_file_atomic(dir / "report.json", report_to_json(report));
}

int exit_code_for(const ExperimentReport& report) {
  if (report.failure) return kExitNumeric;
  return report.all_passed() ? kExitPass : kExitVerdict;
}

}  // namespace speclab
