#pragma once

#include <string>
#include <vector>

namespace reeblab::verify {

struct Check {
  std::string id;
  std::string title;
  bool pass = false;
  std::string detail;
  double millis = 0;
};

/// Worked examples with literature values: presentations, Reeb graphs,
/// simulator constructions and the bounds table.
std::vector<Check> reference_checks();

/// Acceptance criterion k, 1 <= k <= 10.
Check acceptance_check(int k);
std::vector<Check> acceptance_checks();

/// `PASS  id  title  (12.3 ms)  detail` lines, one per check.
std::string format_table(const std::vector<Check>& checks);

}  // namespace reeblab::verify
