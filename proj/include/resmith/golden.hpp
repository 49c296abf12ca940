#pragma once

#include <string>
#include <vector>

namespace resmith {

struct GoldenResult {
  std::string name;
  bool passed = false;
  /// What was computed, for the failure message.
  std::string detail;
};

/// The worked examples with their published values, recomputed from scratch.
std::vector<GoldenResult> run_golden_checks();

}  // namespace resmith
