#pragma once

#include <map>
#include <string>
#include <vector>

namespace walsh {

// Flat numeric table with named columns, the interchange format for every
// experiment. Metadata records p, N, schedule, seed, truncation count and
// whatever else a run wants to pin.
struct ExperimentTable {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::map<std::string, std::string> metadata;

  void add_row(std::initializer_list<double> vals);
  double at(std::size_t row, const std::string& column) const;
  std::size_t column_index(const std::string& column) const;
};

// Shortest decimal form that round-trips to the same double.
std::string format_double(double v);

// RFC-4180 style: quote when a field contains comma, quote or newline,
// double any embedded quotes.
std::string csv_escape(const std::string& field);

std::string to_csv(const ExperimentTable& t);
std::string to_json(const ExperimentTable& t);
ExperimentTable table_from_json(const std::string& text);

// Writes in the requested format. Throws std::runtime_error on I/O failure.
void emit(const ExperimentTable& t, const std::string& format,
          const std::string& path);

}  // namespace walsh
