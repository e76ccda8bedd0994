// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace skg {

/// Table written as CSV with a leading `# schema=<name>/<version>` line.
/// Floating-point cells are printed with 9 significant digits.
class CsvTable {
 public:
  using Cell = std::variant<long long, double, std::string>;

  CsvTable(std::string schema, int version, std::vector<std::string> columns);

  void add_row(std::vector<Cell> row);
  void write(std::ostream& out) const;

  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<Cell>>& rows() const { return rows_; }
  /// Numeric value of column `name` in row `r`.
  double number(std::size_t r, const std::string& name) const;

 private:
  std::string schema_;
  int version_;
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
};

std::string format_double(double v);

}  // namespace skg
