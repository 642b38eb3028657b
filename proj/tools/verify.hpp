#pragma once

#include <string>
#include <vector>

#include <losemilat/point_set.hpp>

namespace losemilat::cli {

enum class CheckStatus { pass, fail, skip };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;  // summary on pass, first counterexample on fail, reason on skip
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  std::size_t total_components = 0;
  std::size_t equations = 0;

  bool ok() const;
};

/// Runs the invariant suites over Eq(n) in L_l^n. Requires n <= l.
VerifyReport run_verification(int n, int l, const Limits& limits);

}  // namespace losemilat::cli
