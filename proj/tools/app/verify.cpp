#include "verify.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <map>
#include <ostream>

#include "projmon/error.hpp"

namespace projmon::app {

std::vector<CheckRecord> run_checks(const std::vector<Check>& checks, const std::vector<int>& only) {
  std::vector<CheckRecord> out;
  for (const auto& c : checks) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.criterion) == only.end()) continue;
    CheckRecord r{c.criterion, c.id, c.location, {}, {}, false, 0.0, {}};
    auto t0 = std::chrono::steady_clock::now();
    try {
      Outcome o = c.run();
      r.expected = o.expected;
      r.computed = o.computed;
      r.pass = o.pass;
      r.note = o.note;
    } catch (const CapExceeded& e) {
      r.computed = "CapExceeded";
      r.note = e.what();
    } catch (const std::exception& e) {
      r.computed = "error";
      r.note = e.what();
    }
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(r));
  }
  return out;
}

nlohmann::json to_json(const CheckRecord& r) {
  return {{"criterion", r.criterion}, {"id", r.id},     {"location", r.location}, {"expected", r.expected},
          {"computed", r.computed},   {"pass", r.pass}, {"millis", r.millis},     {"note", r.note}};
}

void print_record(std::ostream& os, const CheckRecord& r) {
  os << (r.pass ? "  ok   " : "  FAIL ") << std::left << std::setw(34) << r.id << " expected " << r.expected
     << ", computed " << r.computed;
  if (!r.note.empty()) os << "  [" << r.note << "]";
  os << '\n';
}

std::vector<CriterionSummary> summarize(const std::vector<CheckRecord>& records) {
  std::map<int, CriterionSummary> by;
  for (const auto& r : records) {
    auto& s = by.try_emplace(r.criterion, CriterionSummary{r.criterion, true, 0, 0, 0.0}).first->second;
    ++s.checks;
    s.millis += r.millis;
    if (!r.pass) {
      ++s.failed;
      s.pass = false;
    }
  }
  std::vector<CriterionSummary> out;
  for (auto& [k, s] : by) out.push_back(s);
  return out;
}

}  // namespace projmon::app
