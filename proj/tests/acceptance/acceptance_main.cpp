// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "wforge/chart.hpp"
#include "wforge/degree5.hpp"
#include "wforge/geometry.hpp"
#include "wforge/report.hpp"
#include "wforge_cli/cli.hpp"

using namespace wforge;
using wforge::testing::Gen;
using wforge::testing::rel_diff;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& why) {
    if (!ok && pass) {
      pass = false;
      detail = why;
    }
  }
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

SurfacePolynomial exact_surface(const FamilyDescriptor& d) {
  return real_part_surface(build_curve(make_family(d).exact.value()));
}

Outcome enneper_golden() {
  Outcome o;
  const SurfacePolynomial got = exact_surface(enneper());
  const SurfacePolynomial want = wforge::testing::enneper_closed_form();
  for (int k = 0; k < 3; ++k)
    o.require(got.x[k] == want.x[k], "coordinate " + std::to_string(k + 1) + " differs: " + to_string(got.x[k]));
  if (o.pass) o.detail = "exact polynomial equality in all three coordinates";
  return o;
}

Outcome isotropy_suite() {
  Outcome o;
  Gen gen(101);
  for (int k = 0; k < 100; ++k) {
    FamilyDescriptor d;
    switch (k % 4) {
      case 0: d = gen.r11(); break;
      case 1: d = gen.r12(); break;
      case 2: d = gen.r3(); break;
      default: d = enneper(); break;
    }
    const auto iso = check_isotropy(integrand(make_family(d).exact.value()));
    o.require(iso.is_zero(), "nonzero isotropy polynomial for " + to_string(d));
  }
  if (o.pass) o.detail = "100 draws, all exactly zero";
  return o;
}

Outcome degree5_system() {
  Outcome o;
  Gen gen(102);
  int draws = 0;
  for (int family = 0; family < 3; ++family) {
    for (int k = 0; k < 50; ++k, ++draws) {
      const FamilyDescriptor d = family == 0 ? gen.r11() : family == 1 ? gen.r12() : gen.r3();
      const CoeffVectors5 cv = extract_coeffs(exact_surface(d));
      for (const auto& r : system_residual(cv)) o.require(sgn(r) == 0, "nonzero residual for " + to_string(d));
      CoeffVectors5 bent = cv;
      const int vec = gen.integer(0, 9);
      bent[vec][gen.integer(0, 2)] += Rational(1, 1000);
      bool broken = false;
      for (const auto& r : system_residual(bent)) broken = broken || sgn(r) != 0;
      o.require(broken, "perturbation of vector " + std::string(1, degree5_vector_names()[vec]) +
                            " left every residual zero for " + to_string(d));
    }
  }
  if (o.pass) o.detail = std::to_string(draws) + " draws: residuals exactly zero, perturbations detected";
  return o;
}

Outcome structure_validator() {
  Outcome o;
  Gen gen(103);
  auto check = [&](const FamilyDescriptor& d, int want_n) {
    const PairStructure& s = make_family(d).exact.value().structure();
    o.require(s.satisfies_degree_bounds(), "degree bounds violated for " + to_string(d));
    o.require(s.n == want_n, to_string(d) + " has n=" + std::to_string(s.n));
    const bool eq = 2 * s.q + s.r == s.n - 1 || 2 * s.p + s.r == s.n - 1 || s.p + s.q + s.r == s.n - 1;
    o.require(eq && 2 * s.q + s.r <= s.n - 1 && 2 * s.p + s.r <= s.n - 1 && s.p + s.q + s.r <= s.n - 1,
              "independent bound check failed for " + to_string(d));
  };
  for (int k = 0; k < 20; ++k) {
    check(gen.r11(), 5);
    check(gen.r12(), 5);
    check(gen.r3(), 5);
  }
  check(enneper(), 3);
  if (o.pass) o.detail = "60 degree-5 draws with n=5, Enneper with n=3";
  return o;
}

Outcome numeric_minimality() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::pair<std::string, SurfacePolynomialD>> surfaces;
  for (const auto& d : {r11(1, 0), r11(ExactComplex(2, 1), Rational(-1, 2)), r12(1, 0, 1, 1),
                        r12(2, 1, -1, 3), r3(1, 1, 0), r3(ExactComplex(1, -1), 2, Rational(1, 3)),
                        enneper()})
    surfaces.emplace_back(to_string(d), make_family(d).surface());
  surfaces.emplace_back("xw5[1,0,0,1]", real_part_surface(build_curve(xw_degree5(1, 0, 0, 1).pair)));
  for (int n : {4, 5, 6})
    for (double w : {0.5, 1.0, 2.0})
      surfaces.emplace_back("xw[n=" + std::to_string(n) + ",w=" + fmt(w) + "]", xu_wang_surface(n, w));
  double worst_h = 0.0;
  double worst_k = -INFINITY;
  for (const auto& [name, s] : surfaces) {
    const ScanReport r = minimality_scan(PolySurface(s), Region{}, 41);
    worst_h = std::max(worst_h, r.max_relative_h);
    worst_k = std::max(worst_k, r.max_k);
    o.require(r.pass, name + ": relative H " + fmt(r.max_relative_h) + ", max K " + fmt(r.max_k) +
                          ", skipped " + std::to_string(r.skipped));
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(secs < 10.0, "took " + fmt(secs) + " s");
  if (o.pass)
    o.detail = std::to_string(surfaces.size()) + " surfaces, max relative H " + fmt(worst_h) + ", max K " +
               fmt(worst_k) + ", " + fmt(secs) + " s";
  return o;
}

Outcome associated_family() {
  Outcome o;
  Gen gen(106);
  double worst = 0.0;
  for (const auto& d : {enneper(), r11(1, 2), r12(1, 0, 1, 1), r3(1, 1, 0)}) {
    const MinimalCurve curve = build_curve(make_family(d).exact.value());
    const PolySurface base(associated_surface(curve, 0.0));
    for (double t : {M_PI / 6, M_PI / 4, M_PI / 2}) {
      const PolySurface moved(associated_surface(curve, t));
      int done = 0;
      while (done < 20) {
        const double u = gen.uniform(-1, 1);
        const double v = gen.uniform(-1, 1);
        FormsSample a;
        try {
          a = forms_at(base, u, v);
        } catch (const Error&) {
          continue;
        }
        const FormsSample b = forms_at(moved, u, v);
        const double e = std::max({rel_diff(a.E, b.E), rel_diff(a.G, b.G), std::abs(a.F - b.F) / a.E});
        worst = std::max(worst, e);
        o.require(e < 1e-9, to_string(d) + " t=" + fmt(t) + ": first form differs by " + fmt(e));
        ++done;
      }
    }
  }
  if (o.pass) o.detail = "4 surfaces x 3 angles x 20 points, max relative difference " + fmt(worst);
  return o;
}

Outcome mirror_symmetry() {
  Outcome o;
  Gen gen(107);
  for (int k = 0; k < 30; ++k) {
    const FamilyDescriptor d = k % 3 == 0 ? gen.r11() : k % 3 == 1 ? gen.r12() : gen.r3();
    const WeierstrassPair p = make_family(d).exact.value();
    const SurfacePolynomial a = real_part_surface(build_curve(p));
    const SurfacePolynomial b = real_part_surface(build_curve(symmetry_transform(p)));
    o.require(b.x[0] == -a.x[0] && b.x[1] == a.x[1] && b.x[2] == a.x[2],
              "mirror mismatch for " + to_string(d));
  }
  if (o.pass) o.detail = "30 draws over cases 1.1, 1.2, 3: exact (-x1, x2, x3)";
  return o;
}

Outcome canonical_chart_check() {
  Outcome o;
  std::ostringstream summary;
  for (const auto& [d, z0] : {std::pair{enneper(), std::complex<double>(0.0)},
                              std::pair{r3(1, 1, 0), std::complex<double>(1.0)}}) {
    const CanonicalChart chart = canonical_chart(make_family(d).numeric, z0);
    const ChartCheck c = check_chart(chart);
    double abs_f = 0.0;
    for (const ChartNode& n : chart.nodes) abs_f = std::max(abs_f, std::abs(n.forms.F));
    o.require(chart.size == 51 && chart.options.grid_step == 1e-2, "chart is not 0.5x0.5 with h=1e-2");
    o.require(c.first_form_pass() && abs_f < 1e-6,
              to_string(d) + ": E,G vs 1/nu " + fmt(std::max(c.max_e, c.max_g)) + ", |F| " + fmt(abs_f));
    o.require(c.second_form_pass(), to_string(d) + ": second form error " +
                                        fmt(std::max({c.max_l, c.max_m, c.max_n})));
    o.require(c.pde_pass(), to_string(d) + ": PDE residual " + fmt(c.max_pde));
    o.require(c.ode_pass(), to_string(d) + ": ODE residual " + fmt(c.max_ode));
    summary << to_string(d) << " pde " << fmt(c.max_pde) << "; ";
  }
  if (o.pass) o.detail = summary.str() + "forms within tolerance";
  return o;
}

Outcome energy_invariance() {
  Outcome o;
  Gen gen(109);
  int done = 0;
  double worst = 0.0;
  while (done < 100) {
    const FamilyDescriptor d = done % 3 == 0 ? gen.r11() : done % 3 == 1 ? gen.r12() : gen.r3();
    const RationalFunction g = make_family(d).exact->g();
    const std::complex<double> z(gen.uniform(-1, 1), gen.uniform(-1, 1));
    if (std::abs(g.derivative()(z)) < 1e-3 || std::abs(g.denominator()(z)) < 1e-3) continue;
    const ExactComplex alpha = gen.gaussian();
    if (std::abs(1.0 - std::conj(alpha.to_complex()) * g(z)) < 1e-3) continue;
    const double phi = gen.uniform(-M_PI, M_PI);
    const double base = canonical_energy(g, z);
    const double other = done % 2 == 0 ? canonical_energy(moebius_transform(g, alpha, phi), z)
                                       : canonical_energy(inversion_transform(g, phi), z);
    worst = std::max(worst, rel_diff(base, other));
    ++done;
  }
  o.require(worst < 1e-12, "max relative change " + fmt(worst));
  if (o.pass) o.detail = "100 transforms, max relative change " + fmt(worst);
  return o;
}

Outcome distinctness() {
  Outcome o;
  auto run = [](std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return std::pair{code, out.str()};
  };
  const auto [c1, t1] = run({"compare", "--a-family", "r12", "--a-params", "1,0,1,1", "--b-family", "r3",
                             "--b-params", "1,1,0", "--json"});
  o.require(c1 == cli::kExitPass, "compare exited " + std::to_string(c1));
  if (!o.pass) return o;
  const Json j1 = Json::parse(t1);
  o.require(j1["verdict"] == "distinct" && j1["predicate"]["value"] == "1",
            "expected distinct with b^2c+d=1, got " + j1["summary"].get<std::string>());
  const auto [c2, t2] = run({"compare", "--a-family", "r12", "--a-params", "1,1,1,-1", "--b-family", "r3",
                             "--b-params", "1,0,-2", "--json"});
  o.require(c2 == cli::kExitPass, "compare exited " + std::to_string(c2));
  if (!o.pass) return o;
  const Json j2 = Json::parse(t2);
  o.require(j2["verdict"] == "coincident" && j2.contains("reduced_pair"),
            "expected coincident, got " + j2["summary"].get<std::string>());
  if (o.pass)
    o.detail = "distinct (b^2c+d=1); coincident with reduced pair f=" +
               j2["reduced_pair"]["f"].get<std::string>() + ", g=" + j2["reduced_pair"]["g"].get<std::string>();
  return o;
}

Outcome xu_wang_embedding() {
  Outcome o;
  const XuWangDegree5 xw = xw_degree5(1, 0, 0, 1);
  const CoeffVectors5D cv = extract_coeffs(real_part_surface(build_curve(xw.pair)));
  double worst = 0.0;
  for (double r : system_residual(cv)) worst = std::max(worst, std::abs(r));
  o.require(worst < 1e-8, "max residual " + fmt(worst));
  o.require(xw.r12.kind == FamilyKind::R12, "descriptor is " + to_string(xw.r12));
  o.require(std::abs(xw.r12.numeric("b")) == 0.0 && std::abs(xw.r12.numeric("d")) == 0.0,
            "descriptor " + to_string(xw.r12) + " does not have b=d=0");
  // The descriptor must generate the same pair.
  const NumericPair again = make_family(xw.r12).numeric;
  for (std::complex<double> z : {std::complex<double>(0.3, 0.4), {-0.8, 0.1}}) {
    o.require(std::abs(again.f()(z) - xw.pair.f()(z)) < 1e-12 && std::abs(again.g()(z) - xw.pair.g()(z)) < 1e-12,
              "descriptor pair differs from the embedded pair");
  }
  if (o.pass) o.detail = "max residual " + fmt(worst) + ", descriptor " + to_string(xw.r12);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"enneper_golden", enneper_golden},
      {"isotropy_suite", isotropy_suite},
      {"degree5_system_exact", degree5_system},
      {"structure_validator", structure_validator},
      {"numeric_minimality", numeric_minimality},
      {"associated_family_metric", associated_family},
      {"mirror_symmetry", mirror_symmetry},
      {"canonical_chart", canonical_chart_check},
      {"energy_invariance", energy_invariance},
      {"r12_r3_distinctness", distinctness},
      {"xu_wang_embedding", xu_wang_embedding},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, fn] : criteria) {
    ++index;
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << index << "] " << name << ": " << o.detail << '\n';
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
