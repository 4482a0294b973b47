#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace projmon::app {

struct Outcome {
  std::string expected;
  std::string computed;
  bool pass = false;
  std::string note;
};

struct Check {
  int criterion;       // acceptance criterion number
  std::string id;      // e.g. "1.A3"
  std::string location;
  std::function<Outcome()> run;
};

struct CheckRecord {
  int criterion;
  std::string id;
  std::string location;
  std::string expected;
  std::string computed;
  bool pass;
  double millis;
  std::string note;
};

struct SuiteOptions {
  std::size_t cap = 100000;
  std::uint64_t seed = 0;
};

/// Every check of the acceptance battery, in criterion order.
std::vector<Check> paper_suite(const SuiteOptions& opt);

/// Runs the checks whose criterion is in `only` (all when empty).  Errors
/// inside a check become failed records; a cap overflow reads "CapExceeded".
std::vector<CheckRecord> run_checks(const std::vector<Check>& checks, const std::vector<int>& only = {});

nlohmann::json to_json(const CheckRecord& r);
void print_record(std::ostream& os, const CheckRecord& r);

struct CriterionSummary {
  int criterion;
  bool pass;
  std::size_t checks, failed;
  double millis;
};

std::vector<CriterionSummary> summarize(const std::vector<CheckRecord>& records);

}  // namespace projmon::app
