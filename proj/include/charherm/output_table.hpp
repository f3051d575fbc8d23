#ifndef CHARHERM_OUTPUT_TABLE_HPP_
#define CHARHERM_OUTPUT_TABLE_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace charherm {

using Cell = std::variant<double, std::int64_t, std::string>;

enum class OutputFormat { kCsv, kJson };

/// Rectangular result table; every row holds one cell per header column.
struct OutputTable {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;

  /// Throws std::invalid_argument when the row width does not match.
  void add_row(std::vector<Cell> row);
};

/// %.17g, with "nan", "inf" and "-inf" for non-finite values.
std::string format_number(double value);

/// CSV: header line, comma separated, LF endings, no quoting.
void write_csv(const OutputTable& table, std::ostream& out);

/// JSON: array of objects keyed by header names; non-finite numbers are null.
void write_json(const OutputTable& table, std::ostream& out);

void write_table(const OutputTable& table, OutputFormat format, std::ostream& out);

/// Reads back the output of write_csv. Integer literals become int64 cells,
/// other numbers double cells, anything else string cells.
OutputTable read_csv(std::string_view text);

}  // namespace charherm

#endif  // CHARHERM_OUTPUT_TABLE_HPP_
