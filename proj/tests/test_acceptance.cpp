// The paper-reproduction suite: one check per acceptance criterion, printing
// a pass/fail line each.  `algebroid reproduce` runs the same computations.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>

#include "algebroid/reproduce.hpp"

TEST_CASE("acceptance criteria") {
  auto results = algd::run_acceptance(0);
  REQUIRE(results.size() == 12);
  for (const auto& r : results) {
    std::printf("%s  %2d. %s%s%s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.detail.empty() ? "" : " -- ", r.detail.c_str());
    INFO(r.id, " ", r.name, ": ", r.detail);
    CHECK(r.pass);
  }
}
