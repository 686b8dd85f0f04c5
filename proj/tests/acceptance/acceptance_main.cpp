#include <cstdio>
#include <iostream>

#include "checks.hpp"

int main() {
  int failed = 0;
  for (int k = 1; k <= 10; ++k) {
    const auto c = reeblab::verify::acceptance_check(k);
    std::printf("criterion %2d: %s  %s (%.1f ms)%s%s\n", k, c.pass ? "PASS" : "FAIL", c.title.c_str(), c.millis,
                c.detail.empty() ? "" : "  ", c.detail.c_str());
    failed += !c.pass;
  }
  std::printf("%d/10 criteria passed\n", 10 - failed);
  return failed == 0 ? 0 : 1;
}
