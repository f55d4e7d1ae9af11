#include "wforge/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace wforge {

Tolerances Tolerances::scaled(double factor) const {
  if (!(factor > 0.0)) throw Error(ErrorKind::Domain, "tolerance scale must be positive");
  Tolerances t = *this;
  t.scan.relative_h *= factor;
  t.scan.max_k *= factor;
  t.chart.first_form *= factor;
  t.chart.second_form *= factor;
  t.chart.ode *= factor;
  t.chart.pde *= factor;
  t.float_residual *= factor;
  t.metric *= factor;
  return t;
}

Json to_json(const CheckResult& c) {
  Json j;
  j["name"] = c.name;
  j["max_residual"] = c.max_residual;
  j["tolerance"] = c.tolerance;
  j["pass"] = c.pass;
  j["skipped"] = c.skipped;
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

Json residual_json(const std::array<Rational, kSystemEquations>& r) {
  Json out = Json::array();
  const auto& labels = equation_labels();
  for (std::size_t k = 0; k < r.size(); ++k) {
    Json e;
    e["index"] = k + 1;
    e["equation"] = std::string(labels[k]);
    e["exact"] = to_string(r[k]);
    e["value"] = r[k].get_d();
    out.push_back(std::move(e));
  }
  return out;
}

Json residual_json(const std::array<double, kSystemEquations>& r) {
  Json out = Json::array();
  const auto& labels = equation_labels();
  for (std::size_t k = 0; k < r.size(); ++k) {
    Json e;
    e["index"] = k + 1;
    e["equation"] = std::string(labels[k]);
    e["value"] = r[k];
    out.push_back(std::move(e));
  }
  return out;
}

int first_failing_equation(const std::array<Rational, kSystemEquations>& r) {
  for (std::size_t k = 0; k < r.size(); ++k)
    if (sgn(r[k]) != 0) return static_cast<int>(k + 1);
  return 0;
}

int first_failing_equation(const std::array<double, kSystemEquations>& r, double tol) {
  for (std::size_t k = 0; k < r.size(); ++k)
    if (!(std::abs(r[k]) < tol)) return static_cast<int>(k + 1);
  return 0;
}

CheckResult scan_check(const ScanReport& rep) {
  CheckResult c;
  c.name = "minimality_scan";
  c.max_residual = rep.max_relative_h;
  c.tolerance = rep.tolerances.relative_h;
  c.pass = rep.pass;
  c.skipped = rep.skipped;
  char buf[160];
  std::snprintf(buf, sizeof buf, "points=%d max_abs_H=%.3g max_K=%.3g (tol %.3g)", rep.points,
                rep.max_abs_h, rep.max_k, rep.tolerances.max_k);
  c.detail = buf;
  return c;
}

std::vector<CheckResult> chart_checks(const ChartCheck& c) {
  const auto& t = c.tolerances;
  return {
      {"chart_first_form", std::max({c.max_e, c.max_f, c.max_g}), t.first_form, c.first_form_pass(), 0,
       "E=G=1/nu, F=0 relative to 1/nu"},
      {"chart_second_form", std::max({c.max_l, c.max_m, c.max_n}), t.second_form,
       c.second_form_pass(), 0, "L=1, M=0, N=-1"},
      {"chart_ode", c.max_ode, t.ode, c.ode_pass(), 0, "(z')^2 = -1/(f g')"},
      {"ganchev_pde", c.max_pde, t.pde, c.pde_pass(), 0,
       "lap ln nu + 2 nu over " + std::to_string(c.interior_points) + " interior points"},
  };
}

}  // namespace wforge
