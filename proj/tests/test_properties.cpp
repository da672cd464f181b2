#include <doctest.h>

#include "lascar/suite.hpp"

using namespace lascar;

TEST_CASE("property groups pass and come back sorted by name") {
  auto results = run_properties(SuiteConfig{});
  REQUIRE(results.size() == 5);
  for (std::size_t i = 1; i < results.size(); ++i) CHECK(results[i - 1].id < results[i].id);
  for (const auto& r : results) {
    INFO(r.line());
    CHECK(r.passed());
  }
}

TEST_CASE("another seed changes samples, not verdicts") {
  SuiteConfig other;
  other.seed = 20261016;
  for (const auto& r : run_properties(other)) {
    INFO(r.line());
    CHECK(r.passed());
  }
  for (int id : {1, 4, 5}) {
    CheckResult a = run_criterion(id, SuiteConfig{}), b = run_criterion(id, other);
    CHECK(a.passed() == b.passed());
  }
}
