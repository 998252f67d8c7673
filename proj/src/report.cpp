#include "conekit/report.hpp"

#include <algorithm>
#include <ostream>

#include "conekit/linalg.hpp"

namespace conekit {

void VerifyReport::record(std::string input, double lhs, double rhs,
                          double violation) {
  if (violation > max_violation) {
    max_violation = violation;
    worst_input = input;
  }
  rows.push_back({std::move(input), lhs, rhs, violation});
}

void write_report_csv(const VerifyReport& report, std::ostream& out) {
  for (const auto& row : report.rows) {
    out << row.input << ',' << format_double(row.lhs) << ','
        << format_double(row.rhs) << ',' << format_double(row.violation)
        << '\n';
  }
}

double ConicPairReport::max_violation() const {
  return std::max(affinity.max_violation, mixing.max_violation);
}

}  // namespace conekit
