// SPDX-License-Identifier: Apache-2.0
#include "skg/csv.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace skg {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

CsvTable::CsvTable(std::string schema, int version, std::vector<std::string> columns)
    : schema_(std::move(schema)), version_(version), columns_(std::move(columns)) {}

void CsvTable::add_row(std::vector<Cell> row) {
  if (row.size() != columns_.size()) throw std::invalid_argument("CsvTable: row width mismatch");
  rows_.push_back(std::move(row));
}

void CsvTable::write(std::ostream& out) const {
  out << "# schema=" << schema_ << '/' << version_ << '\n';
  for (std::size_t i = 0; i < columns_.size(); ++i) out << (i ? "," : "") << columns_[i];
  out << '\n';
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>)
              out << format_double(v);
            else
              out << v;
          },
          row[i]);
    }
    out << '\n';
  }
}

double CsvTable::number(std::size_t r, const std::string& name) const {
  const auto it = std::find(columns_.begin(), columns_.end(), name);
  if (it == columns_.end()) throw std::invalid_argument("CsvTable: no column " + name);
  const auto& cell = rows_.at(r)[static_cast<std::size_t>(it - columns_.begin())];
  if (const auto* d = std::get_if<double>(&cell)) return *d;
  if (const auto* i = std::get_if<long long>(&cell)) return static_cast<double>(*i);
  throw std::invalid_argument("CsvTable: column " + name + " is not numeric");
}

}  // namespace skg
