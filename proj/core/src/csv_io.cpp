// SPDX-License-Identifier: Apache-2.0

#include "peerrank/csv_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

namespace peerrank {

namespace {

std::string trim(const std::string& s) {
  std::size_t first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  std::size_t last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_cells(const std::string& line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      cells.push_back(trim(line.substr(start)));
      break;
    }
    cells.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
  return cells;
}

bool parse_double(const std::string& cell, double& out) {
  const char* begin = cell.data();
  const char* end = begin + cell.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc() && ptr == end && !cell.empty();
}

// Non-blank lines split into trimmed cells; a first row with any non-numeric
// cell is treated as a header and dropped.
std::vector<std::vector<std::string>> read_rows(std::istream& in,
                                                const std::string& source) {
  if (!in) throw ValidationError(source + ": cannot read input");
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    rows.push_back(split_cells(line));
  }
  if (rows.empty()) throw ValidationError(source + ": file is empty");

  bool header = false;
  for (const std::string& cell : rows.front()) {
    double ignored;
    if (!parse_double(cell, ignored)) {
      header = true;
      break;
    }
  }
  if (header) rows.erase(rows.begin());
  if (rows.empty()) {
    throw ValidationError(source + ": no data rows after header");
  }
  return rows;
}

}  // namespace

std::vector<std::vector<double>> parse_matrix_csv(std::istream& in,
                                                  const std::string& source) {
  const auto rows = read_rows(in, source);
  std::vector<std::vector<double>> values(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    values[i].reserve(rows[i].size());
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      double v;
      if (!parse_double(rows[i][j], v)) {
        std::ostringstream os;
        os << source << ": cannot parse \"" << rows[i][j]
           << "\" as a grade at row " << (i + 1) << ", column " << (j + 1);
        throw ValidationError(os.str());
      }
      if (!(v >= 0.0 && v <= 1.0)) {
        std::ostringstream os;
        os << source << ": entry out of range [0,1] at row " << (i + 1)
           << ", column " << (j + 1) << " (value " << rows[i][j] << ")";
        throw ValidationError(os.str());
      }
      values[i].push_back(v);
    }
  }
  return values;
}

std::vector<std::vector<std::uint8_t>> parse_mask_csv(
    std::istream& in, const std::string& source) {
  const auto rows = read_rows(in, source);
  std::vector<std::vector<std::uint8_t>> bits(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    bits[i].reserve(rows[i].size());
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      const std::string& cell = rows[i][j];
      if (cell != "0" && cell != "1") {
        std::ostringstream os;
        os << source << ": mask cell must be 0 or 1 at row " << (i + 1)
           << ", column " << (j + 1) << " (value \"" << cell << "\")";
        throw ValidationError(os.str());
      }
      bits[i].push_back(cell == "1" ? 1 : 0);
    }
  }
  return bits;
}

std::vector<std::vector<double>> load_matrix_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError(path + ": cannot open file");
  return parse_matrix_csv(in, path);
}

std::vector<std::vector<std::uint8_t>> load_mask_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError(path + ": cannot open file");
  return parse_mask_csv(in, path);
}

GradeMatrix load_grade_matrix(const std::string& matrix_path,
                              const std::optional<std::string>& mask_path) {
  const auto raw = load_matrix_csv(matrix_path);
  if (!mask_path) return validate_matrix(raw);
  return validate_matrix(raw, load_mask_csv(*mask_path));
}

}  // namespace peerrank
