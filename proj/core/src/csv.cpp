#include "fdde/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fdde::csv {

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.16e", x);
  return buf;
}

void write(const std::filesystem::path& file, const std::vector<std::string>& header,
           const std::vector<std::vector<double>>& columns) {
  if (header.size() != columns.size())
    throw std::invalid_argument("csv::write: header/column count mismatch");
  const std::size_t rows = columns.empty() ? 0 : columns.front().size();
  for (const auto& c : columns)
    if (c.size() != rows) throw std::invalid_argument("csv::write: ragged columns");

  const std::filesystem::path tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("csv::write: cannot open " + tmp.string());
    for (std::size_t c = 0; c < header.size(); ++c)
      out << (c ? "," : "") << header[c];
    out << '\n';
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < columns.size(); ++c)
        out << (c ? "," : "") << format_double(columns[c][r]);
      out << '\n';
    }
    if (!out) throw std::runtime_error("csv::write: write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, file);
}

std::vector<std::pair<double, double>> read_two_columns(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::invalid_argument("csv: cannot open " + file.string());
  std::vector<std::pair<double, double>> rows;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string a, b, extra;
    if (!std::getline(ss, a, ',') || !std::getline(ss, b, ','))
      throw std::invalid_argument("csv: expected two columns in " + file.string());
    if (std::getline(ss, extra, ','))
      throw std::invalid_argument("csv: expected two columns in " + file.string());
    char* end = nullptr;
    const double x = std::strtod(a.c_str(), &end);
    if (end == a.c_str() || *end != '\0') {
      if (first) {  // header row
        first = false;
        continue;
      }
      throw std::invalid_argument("csv: malformed number '" + a + "' in " + file.string());
    }
    const double y = std::strtod(b.c_str(), &end);
    if (end == b.c_str() || *end != '\0')
      throw std::invalid_argument("csv: malformed number '" + b + "' in " + file.string());
    rows.emplace_back(x, y);
    first = false;
  }
  if (rows.empty()) throw std::invalid_argument("csv: no data rows in " + file.string());
  return rows;
}

}  // namespace fdde::csv
