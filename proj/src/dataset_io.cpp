#include "smece/dataset_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "json.hpp"
#include "smece/errors.hpp"
#include "smece/table.hpp"

namespace smece {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

std::string where(std::size_t line, std::string_view column) {
  return "line " + std::to_string(line) + ", column '" + std::string(column) + "'";
}

double parse_number(const std::string& text, std::size_t line, std::string_view column) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, value);
  if (text.empty() || res.ec != std::errc{} || res.ptr != end) {
    throw DataFormatError(where(line, column) + ": cannot parse '" + text + "' as a number");
  }
  return value;
}

double require_probability(double value, const std::string& location) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw DataFormatError(location + ": value " + format_shortest(value) +
                          " outside [0,1]");
  }
  return value;
}

int require_binary(double value, const std::string& location) {
  if (value != 0.0 && value != 1.0) {
    throw DataFormatError(location + ": hard label " + format_shortest(value) +
                          " is not 0 or 1");
  }
  return static_cast<int>(value);
}

struct Record {
  double prediction;
  double soft;
  std::optional<int> hard;
};

LoadedSamples finish(const std::vector<Record>& records) {
  if (records.empty()) throw DataFormatError("input contains no samples");
  LoadedSamples out;
  for (const auto& r : records) out.hard_labels_present += r.hard ? 1 : 0;
  out.hard_labels_complete = out.hard_labels_present == records.size();
  out.samples.reserve(records.size());
  for (const auto& r : records) {
    out.samples.emplace_back(r.prediction, r.soft,
                             out.hard_labels_complete ? r.hard : std::nullopt);
  }
  return out;
}

}  // namespace

std::string dataset_to_csv(const LabeledDataset& dataset,
                           const std::array<std::vector<double>, kNumModels>& predictions) {
  std::string out = "x,p_star,y_hard";
  for (auto kind : kAllModels) {
    out += ",p_hat_";
    out += model_letter(kind);
  }
  out += '\n';
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    out += format_shortest(dataset.inputs[i]);
    out += ',';
    out += format_shortest(dataset.soft_labels[i]);
    out += ',';
    out += dataset.hard_labels[i] ? '1' : '0';
    for (const auto& column : predictions) {
      out += ',';
      out += format_shortest(column.at(i));
    }
    out += '\n';
  }
  return out;
}

LoadedSamples parse_samples_csv(std::string_view text, const ColumnSelection& columns) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    ++line_no;
    if (!trim(line).empty()) {
      try {
        header = split_csv_line(line);
      } catch (const DataFormatError& e) {
        throw DataFormatError("line " + std::to_string(line_no) + ": " + e.what());
      }
      break;
    }
  }
  if (header.empty()) throw DataFormatError("missing CSV header");
  for (auto& h : header) h = trim(h);

  auto find = [&](const std::string& name) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (header[i] == name) return i;
    }
    return std::nullopt;
  };
  const auto pred_col = find(columns.prediction);
  const auto soft_col = find(columns.soft_label);
  const auto hard_col = find(columns.hard_label);
  if (!pred_col) throw DataFormatError("header lacks column '" + columns.prediction + "'");
  if (!soft_col) throw DataFormatError("header lacks column '" + columns.soft_label + "'");

  std::vector<Record> records;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    std::vector<std::string> fields;
    try {
      fields = split_csv_line(line);
    } catch (const DataFormatError& e) {
      throw DataFormatError("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (fields.size() != header.size()) {
      throw DataFormatError("line " + std::to_string(line_no) + ": expected " +
                            std::to_string(header.size()) + " fields, found " +
                            std::to_string(fields.size()));
    }
    Record r{};
    r.prediction =
        require_probability(parse_number(trim(fields[*pred_col]), line_no, columns.prediction),
                            where(line_no, columns.prediction));
    r.soft = require_probability(
        parse_number(trim(fields[*soft_col]), line_no, columns.soft_label),
        where(line_no, columns.soft_label));
    if (hard_col) {
      const auto cell = trim(fields[*hard_col]);
      if (!cell.empty()) {
        r.hard = require_binary(parse_number(cell, line_no, columns.hard_label),
                                where(line_no, columns.hard_label));
      }
    }
    records.push_back(r);
  }
  return finish(records);
}

LoadedSamples parse_samples_json(std::string_view text, const ColumnSelection& columns) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DataFormatError(std::string("invalid JSON: ") + e.what());
  }
  const nlohmann::json* list = &doc;
  if (doc.is_object()) {
    if (!doc.contains("samples")) throw DataFormatError("JSON object lacks a 'samples' array");
    list = &doc["samples"];
  }
  if (!list->is_array()) throw DataFormatError("'samples' must be an array");

  auto number = [](const nlohmann::json& obj, const std::string& key,
                   std::size_t index) -> std::optional<double> {
    const auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) return std::nullopt;
    if (!it->is_number()) {
      throw DataFormatError("sample " + std::to_string(index) + ", field '" + key +
                            "': not a number");
    }
    return it->get<double>();
  };

  std::vector<Record> records;
  for (std::size_t i = 0; i < list->size(); ++i) {
    const auto& obj = (*list)[i];
    if (!obj.is_object()) throw DataFormatError("sample " + std::to_string(i) + ": not an object");
    const auto p = number(obj, columns.prediction, i);
    const auto s = number(obj, columns.soft_label, i);
    if (!p || !s) {
      throw DataFormatError("sample " + std::to_string(i) + ": missing '" +
                            (p ? columns.soft_label : columns.prediction) + "'");
    }
    auto loc = [i](const std::string& key) {
      return "sample " + std::to_string(i) + ", field '" + key + "'";
    };
    Record r{require_probability(*p, loc(columns.prediction)),
             require_probability(*s, loc(columns.soft_label)), std::nullopt};
    if (const auto h = number(obj, columns.hard_label, i)) {
      r.hard = require_binary(*h, loc(columns.hard_label));
    }
    records.push_back(r);
  }
  return finish(records);
}

LoadedSamples load_samples(const std::filesystem::path& path, const ColumnSelection& columns) {
  const auto text = read_text_file(path);
  if (path.extension() == ".json") return parse_samples_json(text, columns);
  return parse_samples_csv(text, columns);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

}  // namespace smece
