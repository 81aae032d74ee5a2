#pragma once

#include "coxcat/tables.hpp"

#include <set>

namespace coxcat {

struct CheckResult {
  std::string suite;
  std::string name;
  std::string group;
  int m = 0;  // 0 for m-independent checks
  bool pass = false;
  std::string detail;  // counterexample payload on failure
};

struct VerifyOptions {
  std::vector<int> mValues = {1, 2, 3};
  std::set<std::string> suites = {"all"};
  /// Harness self-test: name of a value to corrupt before comparison.
  std::string injectFault;
};

extern const std::vector<std::string> kAllSuites;

/// Runs the requested identity suites on one group. Results come back in a
/// fixed deterministic order.
std::vector<CheckResult> runVerification(GroupContext& ctx, const VerifyOptions& opt);

}  // namespace coxcat
