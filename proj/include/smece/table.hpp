#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace smece {

enum class TableFormat { kCsv, kJson };

TableFormat parse_table_format(std::string_view text);
std::string_view file_extension(TableFormat format);

using Cell = std::variant<std::string, double, std::int64_t>;

inline constexpr int kShortestRoundTrip = -1;

/// A titled rectangular table. Doubles are written in fixed notation with
/// `precision` decimals, or in shortest round-trip form for kShortestRoundTrip.
struct OutputTable {
  std::string title;
  std::vector<std::string> column_names;
  std::vector<std::vector<Cell>> rows;
  int precision = 4;

  /// Throws DomainError when the row width does not match the header.
  void add_row(std::vector<Cell> row);
};

std::string format_fixed(double value, int precision);
/// Shortest decimal string that parses back to the same double.
std::string format_shortest(double value);

/// RFC 4180: header line, CRLF-free "\n" line ends, quotes where needed.
std::string to_csv(const OutputTable& table);
/// {"title": ..., "columns": [...], "rows": [[...], ...]}; doubles are
/// rounded to the table precision.
std::string to_json(const OutputTable& table);
std::string render(const OutputTable& table, TableFormat format);

std::string csv_escape(std::string_view field);
/// Splits one CSV record. Throws DataFormatError on an unterminated quote.
std::vector<std::string> split_csv_line(std::string_view line);

}  // namespace smece
