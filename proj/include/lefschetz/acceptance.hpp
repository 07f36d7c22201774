#pragma once

// Acceptance checks, shared by the verify-paper subcommand and the test binary.

#include <string>
#include <vector>

namespace lefschetz::acceptance {

struct Outcome {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

inline constexpr int kCriterionCount = 12;

/// Throws std::out_of_range for an unknown id.
Outcome run_criterion(int id);

/// All criteria when ids is empty.
std::vector<Outcome> run(const std::vector<int>& ids = {});

/// "PASS [1] title: detail (0.12 s)"
std::string format(const Outcome& outcome);

}  // namespace lefschetz::acceptance
