#include <cstdlib>
#include <cstring>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "app/verify.hpp"

int main(int argc, char** argv) {
  projmon::app::SuiteOptions opt;
  std::vector<int> only;
  bool verbose = false;
  for (int k = 1; k < argc; ++k) {
    if (!std::strcmp(argv[k], "--only") && k + 1 < argc) only.push_back(std::atoi(argv[++k]));
    else if (!std::strcmp(argv[k], "--seed") && k + 1 < argc) opt.seed = std::strtoull(argv[++k], nullptr, 10);
    else if (!std::strcmp(argv[k], "--verbose")) verbose = true;
    else {
      std::cerr << "usage: acceptance [--only N]... [--seed S] [--verbose]\n";
      return 2;
    }
  }
  auto records = projmon::app::run_checks(projmon::app::paper_suite(opt), only);
  for (const auto& r : records) {
    if (verbose || !r.pass) projmon::app::print_record(std::cout, r);
  }
  bool all = true;
  for (const auto& s : projmon::app::summarize(records)) {
    std::cout << "criterion " << std::setw(2) << s.criterion << ": " << (s.pass ? "PASS" : "FAIL") << "  ("
              << s.checks - s.failed << '/' << s.checks << " checks, " << std::fixed << std::setprecision(0)
              << s.millis << " ms)\n";
    all = all && s.pass;
  }
  return all ? 0 : 1;
}
