#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "lascar/basis.hpp"

namespace lascar {

struct SuiteConfig {
  std::shared_ptr<IrrationalBasis> basis;  // null: the standard basis
  std::uint64_t seed = 1;
  int n_max = 3;
};

struct CheckResult {
  std::string id;  // "1".."8" for acceptance criteria, a name for property groups
  std::string title;
  bool property_ok = true;
  double seconds = 0;
  double limit_seconds = 0;  // 0: no limit
  std::size_t samples = 0;
  std::string detail;  // summary, or the first counterexample

  bool passed() const { return property_ok && (limit_seconds == 0 || seconds < limit_seconds); }
  std::string line() const;
};

/// Acceptance criteria 1..8 in order.
std::vector<CheckResult> run_acceptance(const SuiteConfig& config);
CheckResult run_criterion(int id, const SuiteConfig& config);

/// Property groups beyond the acceptance criteria, sorted by name.
std::vector<CheckResult> run_properties(const SuiteConfig& config);

}  // namespace lascar
