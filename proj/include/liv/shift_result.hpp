#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace liv {

/// CODATA defaults; every CLI run can override them through RunConfig so
/// the unit convention stays visible in the output.
inline constexpr double kDefaultHartreeEV = 27.211386245988;
inline constexpr double kDefaultBohrMeter = 5.29177210903e-11;

/// One first-order energy shift with its per-term breakdown and the
/// corresponding closed-form value quoted for the uniform-coefficient
/// choice, when one exists. The two are reported side by side; a
/// discrepancy is flagged, never hidden and never an error.
struct ShiftResult {
  double value_hartree = 0.0;
  double value_ev = 0.0;
  std::vector<std::pair<std::string, double>> terms;
  std::string method = "analytic"; // "analytic" or "quadrature"
  double error_estimate = 0.0;
  std::optional<double> paper_formula_value_hartree;
  bool discrepancy_flag = false;
  std::string note;
};

} // namespace liv
