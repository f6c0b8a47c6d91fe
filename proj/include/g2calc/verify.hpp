#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace g2calc {

struct VerifyCheck {
  std::string name;
  /// The identity or worked value being replayed, written as a formula.
  std::string anchor;
  /// Acceptance criterion 1..7 the check belongs to; 0 for supporting properties.
  int criterion = 0;
  bool passed = false;
  std::size_t trials = 1;
  /// Rendering of the first failing input, empty on success.
  std::string counterexample;
  double seconds = 0.0;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::vector<VerifyCheck> checks;

  bool all_passed() const;
  /// Whether every check of criterion c passed (false if there are none).
  bool criterion_passed(int c) const;
};

struct VerifyOptions {
  std::uint64_t seed = 42;
  /// Randomized trials per identity; proposition and kernel-shift checks use max(50, trials / 4).
  std::size_t trials = 200;
};

/// Every check is driven by its own generator derived from (seed, check index),
/// so the report is a pure function of the options.
VerifyReport run_verify(const VerifyOptions& options);

}  // namespace g2calc
