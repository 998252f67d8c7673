#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace conekit {

struct SampleRow {
  std::string input;
  double lhs = 0.0;
  double rhs = 0.0;
  double violation = 0.0;
};

/// Per-check outcome with full sample detail. `max_violation` drives the
/// verdict; rows let callers dump the evidence as CSV.
struct VerifyReport {
  std::string name;
  double tol = 0.0;
  double max_violation = 0.0;
  std::string worst_input;
  std::vector<SampleRow> rows;

  bool passed() const { return max_violation <= tol; }
  void record(std::string input, double lhs, double rhs, double violation);
};

/// CSV rows "sample,lhs,rhs,violation", no header.
void write_report_csv(const VerifyReport& report, std::ostream& out);

/// Two-sided convexity verdict: the multiplier must be affine in the point
/// and the action must satisfy the weighted mixing identity.
struct ConicPairReport {
  VerifyReport affinity;
  VerifyReport mixing;
  bool passed() const { return affinity.passed() && mixing.passed(); }
  double max_violation() const;
};

}  // namespace conekit
