#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace anacci {

using Cell = std::variant<double, long long, std::string>;

/// Column-ordered table written as CSV: header row, comma separator, LF line
/// endings, doubles at 17 significant digits.
struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
  void write_csv(std::ostream& out) const;
  std::string to_csv() const;
};

/// Shortest-stable text for a double: "%.17g", with inf/nan spelled out.
std::string format_double(double x);
std::string format_cell(const Cell& cell);

}  // namespace anacci
