#include "walsh/table.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace walsh {

void ExperimentTable::add_row(std::initializer_list<double> vals) {
  if (vals.size() != columns.size())
    throw std::invalid_argument("row width does not match column count");
  rows.emplace_back(vals);
}

std::size_t ExperimentTable::column_index(const std::string& column) const {
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (columns[i] == column) return i;
  throw std::out_of_range("no column named " + column);
}

double ExperimentTable::at(std::size_t row, const std::string& column) const {
  return rows.at(row).at(column_index(column));
}

std::string format_double(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string csv_escape(const std::string& field) {
  bool needs_quotes = field.find_first_of(",\"\n\r") != std::string::npos;
  if (!needs_quotes) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string to_csv(const ExperimentTable& t) {
  std::string out;
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i) out += ',';
    out += csv_escape(t.columns[i]);
  }
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_double(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const ExperimentTable& t) {
  nlohmann::json j;
  j["name"] = t.name;
  j["columns"] = t.columns;
  j["rows"] = t.rows;
  j["metadata"] = t.metadata;
  return j.dump(2);
}

ExperimentTable table_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  ExperimentTable t;
  t.name = j.at("name").get<std::string>();
  t.columns = j.at("columns").get<std::vector<std::string>>();
  t.rows = j.at("rows").get<std::vector<std::vector<double>>>();
  t.metadata = j.at("metadata").get<std::map<std::string, std::string>>();
  return t;
}

void emit(const ExperimentTable& t, const std::string& format, const std::string& path) {
  std::string payload;
  if (format == "csv")
    payload = to_csv(t);
  else if (format == "json")
    payload = to_json(t);
  else
    throw std::invalid_argument("format must be csv or json, got " + format);

  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << payload;
  out.flush();
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

}  // namespace walsh
