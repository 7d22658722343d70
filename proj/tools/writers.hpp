#pragma once

#include <string>
#include <variant>
#include <vector>

namespace gammaecho::cli {

using Cell = std::variant<double, std::string>;

/// Column-based output table with a key/value provenance header. Numbers are
/// written in scientific notation with 17 significant digits; the header
/// echoes the resolved configuration so reruns are reproducible.
struct OutputTable {
  std::string command;
  std::vector<std::pair<std::string, std::string>> header;  // already ordered
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string format_double(double x);

/// Renders to CSV ('#'-prefixed header lines) or JSON and writes atomically
/// (temp file + rename). format is "csv" or "json".
void write_table(const OutputTable& table, const std::string& path,
                 const std::string& format);

std::string render_table(const OutputTable& table, const std::string& format);

}  // namespace gammaecho::cli
