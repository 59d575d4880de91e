#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>

#include "contmeas/selftest.hpp"
#include "doctest.h"

TEST_CASE("acceptance battery") {
  const auto rep = contmeas::run_selftest(0);
  for (const auto& c : rep.criteria)
    std::printf("%s  %2d  %s  %s\n", c.passed ? "PASS" : "FAIL", c.id,
                c.name.c_str(), c.detail.c_str());
  std::fflush(stdout);
  for (const auto& c : rep.criteria) {
    INFO(c.id, " ", c.name, ": ", c.detail);
    CHECK(c.passed);
  }
  CHECK(rep.all_passed);
}
