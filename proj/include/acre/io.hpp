#pragma once

#include <string>
#include <vector>

namespace acre {

/// Shortest decimal string that round-trips to the same double
/// (at most 17 significant digits). Infinities print as inf/-inf.
std::string format_double(double v);

/// Parses a double, accepting "inf" and "-inf".
double parse_double(const std::string& s);

/// Writes via a temporary file in the same directory and renames it into
/// place, so readers never observe a partial file.
void write_atomic(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> columns);

  /// Comment line placed above the column header, prefixed by "# ".
  void add_comment(const std::string& line);
  void add_row(const std::vector<double>& row);
  std::size_t rows() const { return rows_.size(); }
  std::string str() const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::string> comments_;
  std::vector<std::vector<double>> rows_;
};

}  // namespace acre
