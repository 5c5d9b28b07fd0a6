#include "smece/table.hpp"

#include <charconv>
#include <cstdlib>
#include "json.hpp"
#include <system_error>

#include "smece/errors.hpp"

namespace smece {

TableFormat parse_table_format(std::string_view text) {
  if (text == "csv") return TableFormat::kCsv;
  if (text == "json") return TableFormat::kJson;
  throw ConfigError("unknown output format '" + std::string(text) + "'");
}

std::string_view file_extension(TableFormat format) {
  return format == TableFormat::kCsv ? ".csv" : ".json";
}

void OutputTable::add_row(std::vector<Cell> row) {
  if (row.size() != column_names.size()) {
    throw DomainError("table '" + title + "': row has " + std::to_string(row.size()) +
                      " cells, header has " + std::to_string(column_names.size()));
  }
  rows.push_back(std::move(row));
}

std::string format_fixed(double value, int precision) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed, precision);
  if (res.ec != std::errc{}) throw DomainError("cannot format value");
  std::string out(buf, res.ptr);
  // -0.0000 reads badly in a table
  if (out.front() == '-' && out.find_first_not_of("-0.") == std::string::npos) out.erase(0, 1);
  return out;
}

std::string format_shortest(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value);
  if (res.ec != std::errc{}) throw DomainError("cannot format value");
  return std::string(buf, res.ptr);
}

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          fields.back() += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else if (c != '\r') {
      fields.back() += c;
    }
  }
  if (quoted) throw DataFormatError("unterminated quoted field");
  return fields;
}

namespace {

std::string cell_text(const Cell& cell, int precision) {
  if (const auto* s = std::get_if<std::string>(&cell)) return *s;
  if (const auto* d = std::get_if<double>(&cell)) {
    return precision == kShortestRoundTrip ? format_shortest(*d) : format_fixed(*d, precision);
  }
  return std::to_string(std::get<std::int64_t>(cell));
}

}  // namespace

std::string to_csv(const OutputTable& table) {
  std::string out;
  for (std::size_t i = 0; i < table.column_names.size(); ++i) {
    if (i) out += ',';
    out += csv_escape(table.column_names[i]);
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += csv_escape(cell_text(row[i], table.precision));
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const OutputTable& table) {
  nlohmann::ordered_json doc;
  doc["title"] = table.title;
  doc["columns"] = table.column_names;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    auto jrow = nlohmann::ordered_json::array();
    for (const auto& cell : row) {
      if (const auto* s = std::get_if<std::string>(&cell)) {
        jrow.push_back(*s);
      } else if (const auto* d = std::get_if<double>(&cell)) {
        jrow.push_back(table.precision == kShortestRoundTrip
                           ? *d
                           : std::strtod(format_fixed(*d, table.precision).c_str(), nullptr));
      } else {
        jrow.push_back(std::get<std::int64_t>(cell));
      }
    }
    rows.push_back(std::move(jrow));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

std::string render(const OutputTable& table, TableFormat format) {
  return format == TableFormat::kCsv ? to_csv(table) : to_json(table);
}

}  // namespace smece
