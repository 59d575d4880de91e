#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace contmeas {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;  // deterministic, fixed formatting
};

struct SelftestReport {
  uint64_t seed = 0;
  std::vector<CriterionResult> criteria;
  bool all_passed = false;
};

/// Runs the full acceptance battery. Deterministic in the seed.
SelftestReport run_selftest(uint64_t seed);

/// One line per criterion: "PASS|FAIL  <id>  <name>  <detail>".
std::string format_selftest(const SelftestReport& r);

}  // namespace contmeas
