#include <cstdio>

#include "g2calc/verify.hpp"

int main() {
  const char* labels[] = {
      "",
      "golden examples",
      "identity suite",
      "rank and dimension facts",
      "metric recovery",
      "bracket-zero biconditional",
      "kernel-shift independence",
      "flat-space counterexample for R and cR",
  };
  const auto report = g2calc::run_verify({42, 200});
  int failed = 0;
  for (int c = 1; c <= 7; ++c) {
    std::size_t n = 0;
    double seconds = 0.0;
    for (const auto& check : report.checks) {
      if (check.criterion != c) continue;
      ++n;
      seconds += check.seconds;
      if (!check.passed) std::printf("  failed: %s  %s\n", check.name.c_str(), check.counterexample.c_str());
    }
    const double budget = c == 1 ? 1.0 : c == 2 ? 30.0 : 60.0;
    const bool ok = report.criterion_passed(c) && seconds < budget;
    if (!ok) ++failed;
    std::printf("%s criterion %d: %s (%zu checks, %.3f s)\n", ok ? "PASS" : "FAIL", c, labels[c], n, seconds);
  }
  for (const auto& check : report.checks)
    if (check.criterion == 0 && !check.passed) {
      std::printf("FAIL supporting: %s\n", check.name.c_str());
      ++failed;
    }
  return failed == 0 ? 0 : 1;
}
