// Acceptance suite: one line per criterion, exact arithmetic throughout.
// Exits nonzero if any criterion fails.

#include <cstdio>

#include "zpd/scenarios.hpp"

int main() {
  auto results = zpd::scenarios::acceptance_suite(42);
  int n = 0, passed = 0;
  for (const auto& r : results) {
    ++n;
    if (r.pass) ++passed;
    std::printf("[%s] criterion %2d (%s): %s (%d ms)\n",
                r.pass ? "PASS" : "FAIL", n, r.name.c_str(), r.details.c_str(),
                int(r.ms));
  }
  std::printf("%s: %d/%d criteria passed\n",
              passed == n ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL", passed, n);
  return passed == n ? 0 : 1;
}
