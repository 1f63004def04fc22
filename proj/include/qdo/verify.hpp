#pragma once

#include <string>
#include <vector>

namespace qdo::verify {

/// One named invariant check.  Informational entries (the closed-form
/// discrepancy notes) always pass; they exist so reports surface the
/// dual-computation differences without hiding either value.
struct CheckResult {
  std::string name;
  bool pass = true;
  bool informational = false;
  double defect = 0.0;
  double tol = 0.0;
  std::string detail;
};

std::vector<CheckResult> suite_gaussian();
std::vector<CheckResult> suite_ck();
std::vector<CheckResult> suite_bft();
std::vector<CheckResult> suite_amplified();
std::vector<CheckResult> suite_coupled();

/// name: one of ck, bft, amplified, coupled, all.  "all" prepends the
/// gaussian-core suite.  Throws ConfigError for unknown names.
std::vector<CheckResult> suite(const std::string& name);

bool all_pass(const std::vector<CheckResult>& results);
std::string format_report(const std::vector<CheckResult>& results);

}  // namespace qdo::verify
