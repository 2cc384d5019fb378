#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wordcensus {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double seconds = 0.0;
  std::string detail;  // empty on pass, first failing case otherwise
};

struct SuiteResult {
  std::vector<CriterionResult> criteria;
  bool all_passed = false;
};

// Runs the seven-part verification sweep over the group catalog. `out`
// receives one deterministic pass/fail line per criterion (safe to compare
// byte-for-byte across runs); timings and failure details go to `diag`.
SuiteResult run_acceptance_suite(std::ostream& out, std::ostream& diag);

}  // namespace wordcensus
