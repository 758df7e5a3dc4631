#pragma once

// Reader for observed PoD term structures:
//
//   year,pod_percent[,weight]
//   1,4.51
//   2,9.87
//
// Rows and columns in errors are 1-based with the header as row 1.

#include <charconv>
#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include "ebc/calibration.hpp"
#include "ebc/errors.hpp"

namespace ebc::cli {

enum class DatasetErrorKind { empty_file, malformed_header, non_numeric_cell, wrong_column_count, non_increasing_year };

inline std::string_view to_string(DatasetErrorKind k) {
  switch (k) {
    case DatasetErrorKind::empty_file: return "empty file";
    case DatasetErrorKind::malformed_header: return "malformed header";
    case DatasetErrorKind::non_numeric_cell: return "non-numeric cell";
    case DatasetErrorKind::wrong_column_count: return "wrong column count";
    case DatasetErrorKind::non_increasing_year: return "non-increasing year";
  }
  return "?";
}

class DatasetParseError : public DataError {
 public:
  DatasetParseError(DatasetErrorKind kind, int row, int column, const std::string& detail)
      : DataError(message(kind, row, column, detail)), kind_(kind), row_(row), column_(column) {}

  DatasetErrorKind kind() const { return kind_; }
  int row() const { return row_; }        // 0 when not tied to a row
  int column() const { return column_; }  // 0 when not tied to a cell

 private:
  static std::string message(DatasetErrorKind kind, int row, int column, const std::string& detail) {
    std::string m(to_string(kind));
    if (row > 0) m += " at row " + std::to_string(row);
    if (column > 0) m += ", column " + std::to_string(column);
    if (!detail.empty()) m += ": " + detail;
    return m;
  }

  DatasetErrorKind kind_;
  int row_;
  int column_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto blank = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && blank(s.front())) s.remove_prefix(1);
  while (!s.empty() && blank(s.back())) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split_cells(std::string_view line) {
  std::vector<std::string_view> out;
  for (;;) {
    const auto comma = line.find(',');
    out.push_back(trim(line.substr(0, comma)));
    if (comma == std::string_view::npos) return out;
    line.remove_prefix(comma + 1);
  }
}

inline double parse_cell(std::string_view s, int row, int column) {
  double v = 0.0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || end != s.data() + s.size() || !std::isfinite(v))
    throw DatasetParseError(DatasetErrorKind::non_numeric_cell, row, column, "'" + std::string(s) + "'");
  return v;
}

}  // namespace detail

/// Parses dataset CSV text. PoD percentages become fractions; a missing
/// weight column means unit weights. Blank lines are skipped.
inline HistoricalDataset parse_dataset(std::string_view text, std::string label) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);
  std::vector<std::pair<int, std::string_view>> lines;
  int row = 0;
  for (std::string_view rest = text; !rest.empty();) {
    const auto nl = rest.find('\n');
    const std::string_view line = detail::trim(rest.substr(0, nl));
    ++row;
    if (!line.empty()) lines.emplace_back(row, line);
    if (nl == std::string_view::npos) break;
    rest.remove_prefix(nl + 1);
  }
  if (lines.empty()) throw DatasetParseError(DatasetErrorKind::empty_file, 0, 0, "");

  const auto header = detail::split_cells(lines.front().second);
  const bool weighted = header.size() == 3 && header[2] == "weight";
  if (header.size() < 2 || header[0] != "year" || header[1] != "pod_percent" || (header.size() == 3 && !weighted) ||
      header.size() > 3)
    throw DatasetParseError(DatasetErrorKind::malformed_header, lines.front().first, 0,
                            "expected 'year,pod_percent[,weight]'");
  if (lines.size() == 1) throw DatasetParseError(DatasetErrorKind::empty_file, 0, 0, "no data rows");

  std::vector<DataPoint> points;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto [r, line] = lines[i];
    const auto cells = detail::split_cells(line);
    if (cells.size() != header.size())
      throw DatasetParseError(DatasetErrorKind::wrong_column_count, r, 0,
                              std::to_string(cells.size()) + " cells, expected " + std::to_string(header.size()));
    DataPoint p;
    p.t = detail::parse_cell(cells[0], r, 1);
    p.pod = detail::parse_cell(cells[1], r, 2) / 100.0;
    if (weighted) p.weight = detail::parse_cell(cells[2], r, 3);
    if (!points.empty() && !(p.t > points.back().t))
      throw DatasetParseError(DatasetErrorKind::non_increasing_year, r, 1, "");
    points.push_back(p);
  }
  return {std::move(label), std::move(points)};
}

/// Label for a dataset read from `path`: the file name without extension.
inline std::string label_from_path(std::string_view path) {
  const auto slash = path.find_last_of("/\\");
  std::string_view name = slash == std::string_view::npos ? path : path.substr(slash + 1);
  const auto dot = name.rfind('.');
  if (dot != std::string_view::npos && dot > 0) name = name.substr(0, dot);
  return std::string(name);
}

}  // namespace ebc::cli
