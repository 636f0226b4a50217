#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gsp4 {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  std::optional<std::string> counterexample;
  /// Precision (box size) consumed, when meaningful.
  std::optional<std::int64_t> precision;
};

struct Report {
  std::string suite;
  std::int64_t p = 0;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

}  // namespace gsp4
