#include "writers.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "config.hpp"

namespace gammaecho::cli {

std::string format_double(double x) {
  if (!std::isfinite(x)) throw ConfigError("refusing to emit a non-finite value");
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16e", x);
  return buf;
}

namespace {

std::string render_csv(const OutputTable& t) {
  std::ostringstream out;
  out << "# command = " << t.command << "\n";
  for (const auto& [k, v] : t.header) out << "# " << k << " = " << v << "\n";
  for (size_t c = 0; c < t.columns.size(); ++c)
    out << t.columns[c] << (c + 1 < t.columns.size() ? "," : "\n");
  for (const auto& row : t.rows) {
    for (size_t c = 0; c < row.size(); ++c) {
      if (std::holds_alternative<double>(row[c]))
        out << format_double(std::get<double>(row[c]));
      else
        out << std::get<std::string>(row[c]);
      out << (c + 1 < row.size() ? "," : "\n");
    }
  }
  return out.str();
}

std::string render_json(const OutputTable& t) {
  nlohmann::ordered_json j;
  j["command"] = t.command;
  nlohmann::ordered_json cfg;
  for (const auto& [k, v] : t.header) cfg[k] = v;
  j["config"] = cfg;
  j["columns"] = t.columns;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    auto jr = nlohmann::ordered_json::array();
    for (const auto& cell : row) {
      if (std::holds_alternative<double>(cell)) {
        const double x = std::get<double>(cell);
        if (!std::isfinite(x)) throw ConfigError("refusing to emit a non-finite value");
        jr.push_back(x);
      } else {
        jr.push_back(std::get<std::string>(cell));
      }
    }
    rows.push_back(std::move(jr));
  }
  j["rows"] = std::move(rows);
  return j.dump(1) + "\n";
}

}  // namespace

std::string render_table(const OutputTable& table, const std::string& format) {
  if (format == "csv") return render_csv(table);
  if (format == "json") return render_json(table);
  throw ConfigError("config key 'format' must be csv or json");
}

void write_table(const OutputTable& table, const std::string& path,
                 const std::string& format) {
  const std::string body = render_table(table, format);
  const std::filesystem::path target(path);
  if (target.has_parent_path())
    std::filesystem::create_directories(target.parent_path());
  const std::filesystem::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot write output file '" + path + "'");
    out << body;
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace gammaecho::cli
