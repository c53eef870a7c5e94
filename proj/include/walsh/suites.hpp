#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "walsh/table.hpp"
#include "walsh/types.hpp"

namespace walsh {

struct SuiteOptions {
  int resolution = 12;
  std::uint64_t seed = 20200926;
  int jobs = 1;
  index_t max_n = 0;  // 0 = suite default
};

struct Assertion {
  std::string suite;
  std::string name;      // what is being checked, as a formula
  double value = 0.0;    // computed quantity
  double bound = 0.0;    // the bound or expected value it is compared to
  std::string relation;  // "<=", ">=", "==", "<"
  bool pass = false;
};

struct SuiteResult {
  std::string name;
  std::vector<Assertion> assertions;
  double seconds = 0.0;
  bool pass() const;
  std::size_t failed() const;
};

const std::vector<std::string>& suite_names();  // without "all"
bool is_suite_name(const std::string& name);

// Runs one named suite. "all" runs every suite in order.
std::vector<SuiteResult> run_suite(const std::string& name, const SuiteOptions& opt);

ExperimentTable suite_report(const std::vector<SuiteResult>& results,
                             const SuiteOptions& opt);

}  // namespace walsh
