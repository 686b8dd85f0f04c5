#include "checks.hpp"
#include "test_util.hpp"

TEST_CASE("reference checks") {
  for (const auto& c : reeblab::verify::reference_checks()) {
    INFO(c.id << ": " << c.detail);
    CHECK(c.pass);
  }
}

TEST_CASE("acceptance checks are indexed 1 to 10") {
  CHECK_THROWS_AS(reeblab::verify::acceptance_check(0), std::out_of_range);
  CHECK_THROWS_AS(reeblab::verify::acceptance_check(11), std::out_of_range);
}
