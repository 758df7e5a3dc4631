#pragma once

// Minimal CSV writer with a fixed numeric format (10 significant digits,
// '.' separator, '\n' line ends) so output is byte-identical across runs.

#include <cstdint>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "ebc/errors.hpp"

namespace ebc::cli {

inline std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

using Cell = std::variant<double, std::int64_t, std::string>;

class CsvTable {
 public:
  CsvTable() = default;
  explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

  void add_row(std::vector<Cell> row) {
    if (row.size() != header_.size()) throw PreconditionError("row width does not match header");
    rows_.push_back(std::move(row));
  }

  const std::vector<std::string>& header() const { return header_; }
  const std::vector<std::vector<Cell>>& rows() const { return rows_; }
  std::size_t size() const { return rows_.size(); }

  std::size_t column(const std::string& name) const {
    for (std::size_t i = 0; i < header_.size(); ++i)
      if (header_[i] == name) return i;
    throw PreconditionError("no column '" + name + "'");
  }

  /// Numeric value of a cell; strings are not convertible.
  double number(std::size_t row, const std::string& name) const {
    const Cell& c = rows_.at(row).at(column(name));
    if (const double* d = std::get_if<double>(&c)) return *d;
    if (const std::int64_t* i = std::get_if<std::int64_t>(&c)) return static_cast<double>(*i);
    throw PreconditionError("column '" + name + "' is not numeric");
  }

  const std::string& text(std::size_t row, const std::string& name) const {
    return std::get<std::string>(rows_.at(row).at(column(name)));
  }

  void write(std::ostream& os) const {
    write_line(os, header_);
    std::vector<std::string> cells;
    for (const auto& row : rows_) {
      cells.clear();
      for (const Cell& c : row) cells.push_back(render(c));
      write_line(os, cells);
    }
  }

  std::string str() const {
    std::ostringstream os;
    write(os);
    return os.str();
  }

 private:
  static std::string render(const Cell& c) {
    if (const double* d = std::get_if<double>(&c)) return format_number(*d);
    if (const std::int64_t* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
    return std::get<std::string>(c);
  }

  static void write_line(std::ostream& os, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) os << ',';
      os << cells[i];
    }
    os << '\n';
  }

  std::vector<std::string> header_;
  std::vector<std::vector<Cell>> rows_;
};

}  // namespace ebc::cli
