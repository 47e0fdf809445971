#ifndef FDDE_CSV_HPP
#define FDDE_CSV_HPP

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace fdde::csv {

// Formats a double with 17 significant digits; round-trips exactly.
std::string format_double(double x);

// Writes comma-separated columns under a header row, LF line endings, every
// float at 17 significant digits. The file appears atomically (written to a
// temp name, then renamed).
void write(const std::filesystem::path& file, const std::vector<std::string>& header,
           const std::vector<std::vector<double>>& columns);

// Reads a two-column numeric CSV; one leading non-numeric header row is
// skipped. Malformed rows raise std::invalid_argument.
std::vector<std::pair<double, double>> read_two_columns(const std::filesystem::path& file);

}  // namespace fdde::csv

#endif
