#pragma once

#include <array>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wforge/chart.hpp"
#include "wforge/degree5.hpp"
#include "wforge/geometry.hpp"

namespace wforge {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;

/// Every numeric tolerance used by verification, in one place.
struct Tolerances {
  ScanTolerances scan;
  ChartTolerances chart;
  double float_residual = 1e-8;  // degree-5 system on float coefficients
  double metric = 1e-9;          // associated-family first form, relative

  // Multiplies every entry by `factor` (> 0).
  Tolerances scaled(double factor) const;
};

struct CheckResult {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  int skipped = 0;
  std::string detail;
};

Json to_json(const CheckResult& c);

// Exact residuals: index (1-based), label, exact string, float value.
Json residual_json(const std::array<Rational, kSystemEquations>& r);
Json residual_json(const std::array<double, kSystemEquations>& r);

// 1-based index of the first nonzero exact residual, 0 if all vanish.
int first_failing_equation(const std::array<Rational, kSystemEquations>& r);
// Same for float residuals above `tol`.
int first_failing_equation(const std::array<double, kSystemEquations>& r, double tol);

CheckResult scan_check(const ScanReport& rep);
std::vector<CheckResult> chart_checks(const ChartCheck& c);

}  // namespace wforge
