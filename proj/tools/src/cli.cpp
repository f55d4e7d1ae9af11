#include "wforge_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "subject.hpp"
#include "wforge/chart.hpp"
#include "wforge/degree5.hpp"
#include "wforge/mesh.hpp"
#include "wforge/report.hpp"
#include "wforge/text.hpp"

namespace wforge::cli {

namespace {

using cd = std::complex<double>;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double tolerance_scale() {
  const char* env = std::getenv("WFORGE_TOL_SCALE");
  if (!env || !*env) return 1.0;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (*end != '\0' || !(v > 0.0) || !std::isfinite(v))
    throw UsageError("WFORGE_TOL_SCALE must be a positive number, got \"" + std::string(env) + "\"");
  return v;
}

std::pair<double, double> parse_range(const std::string& text) {
  const auto parts = split_top_level(text);
  if (parts.size() != 2) throw UsageError("range must look like lo,hi: \"" + text + "\"");
  char* e0 = nullptr;
  char* e1 = nullptr;
  const double lo = std::strtod(parts[0].c_str(), &e0);
  const double hi = std::strtod(parts[1].c_str(), &e1);
  if (*e0 != '\0' || *e1 != '\0' || parts[0].empty() || parts[1].empty() || !(lo < hi))
    throw UsageError("range must be two increasing numbers: \"" + text + "\"");
  return {lo, hi};
}

Region parse_region(const std::string& range, const std::string& vrange) {
  Region r;
  if (!range.empty()) std::tie(r.u0, r.u1) = parse_range(range);
  r.v0 = r.u0;
  r.v1 = r.u1;
  if (!vrange.empty()) std::tie(r.v0, r.v1) = parse_range(vrange);
  return r;
}

std::pair<int, int> parse_resolution(const std::string& text) {
  const auto x = text.find('x');
  try {
    std::size_t used = 0;
    if (x == std::string::npos) {
      const int n = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {n, n};
    }
    const int a = std::stoi(text.substr(0, x), &used);
    if (used != x) throw std::invalid_argument(text);
    const std::string rest = text.substr(x + 1);
    const int b = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(text);
    return {a, b};
  } catch (const std::logic_error&) {
    throw UsageError("resolution must be N or NxM: \"" + text + "\"");
  }
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

void add_subject_options(CLI::App* app, SubjectInput& in, const std::string& prefix = "") {
  const std::string p = prefix.empty() ? "--" : "--" + prefix + "-";
  app->add_option(p + "family", in.family, "family: r11, r12, r3, xw5, xw, enneper");
  app->add_option(p + "params", in.params, "comma-separated parameters, e.g. 1,0,1,1 or 1/3,(1,2)");
  app->add_option(p + "f", in.f, "explicit f, e.g. \"poly[(0,0),(0,0),(1,0)]\" or \"z^2\"");
  app->add_option(p + "g", in.g, "explicit g, e.g. \"z\" or \"(z^2+1)/z\"");
  if (prefix.empty()) {
    app->add_option("--n", in.n, "degree n of the xw family");
    app->add_option("--omega", in.omega, "omega >= 0 of the xw family");
  }
}

Json subject_json(const Subject& s) {
  Json j;
  j["label"] = s.label;
  if (s.descriptor) {
    j["family"] = std::string(to_string(s.descriptor->kind));
    Json params = Json::object();
    for (const auto& [name, v] : s.descriptor->params) params[name] = to_string(v);
    j["params"] = params;
  }
  j["exact"] = s.exact.has_value();
  if (s.exact) {
    j["f"] = format_poly(s.exact->f());
    j["g_numerator"] = format_poly(s.exact->g().numerator());
    j["g_denominator"] = format_poly(s.exact->g().denominator());
  }
  j["structure"] = {{"p", s.p}, {"q", s.q}, {"r", s.r}, {"n", s.n}};
  if (!s.notes.empty()) j["notes"] = s.notes;
  return j;
}

std::optional<Classification> classify(const Subject& s) {
  if (!s.exact || s.n != 5) return std::nullopt;
  return classify_pair(*s.exact);
}

Json classification_json(const Classification& c) {
  Json j;
  j["case"] = c.label;
  j["mirrored"] = c.mirrored;
  if (c.normal_form) j["normal_form"] = to_string(*c.normal_form);
  if (c.also) j["also"] = to_string(*c.also);
  j["summary"] = c.summary;
  return j;
}

template <class R>
double max_abs_coeff(const BasicBivariate<R>& p) {
  double m = 0.0;
  for (const auto& [e, c] : p.terms()) m = std::max(m, std::abs(to_numeric(c)));
  return m;
}

double max_abs_coeff(const ComplexPolyD& p) {
  double m = 0.0;
  for (const auto& c : p.coefficients()) m = std::max(m, std::abs(c));
  return m;
}

CheckResult exact_identity(std::string name, bool zero, std::string detail) {
  return {std::move(name), zero ? 0.0 : 1.0, 0.0, zero, 0, std::move(detail)};
}

CheckResult relative_check(std::string name, double residual, double tol, std::string detail) {
  return {std::move(name), residual, tol, residual < tol, 0, std::move(detail)};
}

CheckResult not_applicable(std::string name, std::string why) {
  return {std::move(name), 0.0, 0.0, true, 0, "not applicable: " + std::move(why)};
}

struct Degree5Outcome {
  CheckResult check;
  Json residuals;
};

Degree5Outcome degree5_exact(const CoeffVectors5& cv) {
  const auto r = system_residual(cv);
  const int bad = first_failing_equation(r);
  Degree5Outcome o;
  o.residuals = residual_json(r);
  double worst = 0.0;
  for (const auto& x : r) worst = std::max(worst, std::abs(x.get_d()));
  o.check = {"degree5_system", worst, 0.0, bad == 0, 0,
             bad == 0 ? "18 residuals exactly zero"
                      : "equation " + std::to_string(bad) + " (" +
                            std::string(equation_labels()[static_cast<std::size_t>(bad - 1)]) +
                            ") = " + to_string(r[static_cast<std::size_t>(bad - 1)])};
  return o;
}

Degree5Outcome degree5_float(const CoeffVectors5D& cv, double tol) {
  const auto r = system_residual(cv);
  const int bad = first_failing_equation(r, tol);
  Degree5Outcome o;
  o.residuals = residual_json(r);
  double worst = 0.0;
  for (double x : r) worst = std::max(worst, std::abs(x));
  o.check = {"degree5_system", worst, tol, bad == 0, 0,
             bad == 0 ? "18 residuals below tolerance (float coefficients)"
                      : "equation " + std::to_string(bad) + " (" +
                            std::string(equation_labels()[static_cast<std::size_t>(bad - 1)]) + ")"};
  return o;
}

// Tries z0 candidates in a fixed order; the first chart that can be built
// is checked.
std::vector<CheckResult> chart_checks_for(const Subject& s, const Tolerances& tol,
                                          std::optional<cd> z0, Json& chart_info) {
  if (s.planar) {
    std::vector<CheckResult> out;
    for (const char* name : {"chart_first_form", "chart_second_form", "chart_ode", "ganchev_pde"})
      out.push_back(not_applicable(name, "f g' vanishes identically (planar)"));
    return out;
  }
  std::vector<cd> candidates;
  if (z0) {
    candidates = {*z0};
  } else {
    candidates = {cd(0, 0), cd(1, 0), cd(0.5, 0.5), cd(-1, 0), cd(0.3, -0.7), cd(1, 1), cd(2, 0)};
  }
  std::string last_error;
  for (const cd c : candidates) {
    try {
      const CanonicalChart chart = canonical_chart(s.numeric, c);
      chart_info = {{"z0", {c.real(), c.imag()}},
                    {"size", chart.size},
                    {"grid_step", chart.options.grid_step},
                    {"ode_step", chart.options.ode_step}};
      return chart_checks(check_chart(chart, tol.chart));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::BranchPointProximity) throw;
      last_error = e.what();
    }
  }
  std::vector<CheckResult> out;
  for (const char* name : {"chart_first_form", "chart_second_form", "chart_ode", "ganchev_pde"})
    out.push_back({name, 0.0, 0.0, false, 0, "no chart start point away from zeros of f g': " + last_error});
  return out;
}

Json checks_json(const std::vector<CheckResult>& checks) {
  Json a = Json::array();
  for (const auto& c : checks) a.push_back(to_json(c));
  return a;
}

void print_checks(std::ostream& out, const std::vector<CheckResult>& checks) {
  for (const auto& c : checks) {
    char line[512];
    std::snprintf(line, sizeof line, "%s %-18s residual=%-10s tol=%-8s", c.pass ? "PASS" : "FAIL",
                  c.name.c_str(), fmt(c.max_residual).c_str(), fmt(c.tolerance).c_str());
    out << line;
    if (c.skipped) out << " skipped=" << c.skipped;
    if (!c.detail.empty()) out << "  " << c.detail;
    out << '\n';
  }
}

int finish(std::ostream& out, const std::vector<CheckResult>& checks, Json report, bool json,
           const std::string& report_path) {
  std::vector<std::string> failed;
  for (const auto& c : checks)
    if (!c.pass) failed.push_back(c.name);
  report["checks"] = checks_json(checks);
  report["failed"] = failed;
  report["pass"] = failed.empty();
  if (!report_path.empty()) {
    std::ofstream f(report_path);
    if (!f) throw Error(ErrorKind::Io, "cannot write report " + report_path);
    f << report.dump(2) << '\n';
  }
  if (json) {
    out << report.dump(2) << '\n';
  } else {
    print_checks(out, checks);
    if (failed.empty()) {
      out << "result: PASS (" << checks.size() << " checks)\n";
    } else {
      out << "result: FAIL";
      for (const auto& c : checks)
        if (!c.pass) out << " [" << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "]";
      out << '\n';
    }
  }
  return failed.empty() ? kExitPass : kExitCheckFailed;
}

// ---- verify ---------------------------------------------------------------

struct VerifyConfig {
  SubjectInput subject;
  std::string coeffs;
  std::string range;
  std::string vrange;
  int grid = 41;
  std::string z0;
  bool json = false;
  std::string report;
};

Rational json_rational(const Json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_number()) return rational_from_double(v.get<double>());
  throw Error(ErrorKind::Parse, "coefficient entries must be numbers or rational strings");
}

int verify_coeffs(const VerifyConfig& cfg, std::ostream& out) {
  std::ifstream f(cfg.coeffs);
  if (!f) throw Error(ErrorKind::Io, "cannot read " + cfg.coeffs);
  Json doc;
  try {
    doc = Json::parse(f);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("coefficient file: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::Parse, "coefficient file must hold an object");
  CoeffVectors5 cv;
  const auto& names = degree5_vector_names();
  for (const auto& [key, value] : doc.items()) {
    const auto it = std::find(names.begin(), names.end(), key.size() == 1 ? key[0] : '?');
    if (it == names.end()) throw Error(ErrorKind::Parse, "unknown coefficient vector \"" + key + "\"");
    if (!value.is_array() || value.size() != 3)
      throw Error(ErrorKind::Parse, "vector " + key + " must have three entries");
    auto& slot = cv[static_cast<std::size_t>(it - names.begin())];
    for (std::size_t k = 0; k < 3; ++k) slot[k] = json_rational(value[k]);
  }
  Degree5Outcome d5 = degree5_exact(cv);
  Json report;
  report["schema_version"] = kReportSchemaVersion;
  report["command"] = "verify";
  report["subject"] = {{"label", "coefficients from " + cfg.coeffs}};
  report["degree5_residuals"] = d5.residuals;
  return finish(out, {d5.check}, std::move(report), cfg.json, cfg.report);
}

int cmd_verify(const VerifyConfig& cfg, std::ostream& out) {
  const Tolerances tol = Tolerances{}.scaled(tolerance_scale());
  if (!cfg.coeffs.empty()) {
    if (cfg.subject.given()) throw UsageError("--coeffs cannot be combined with a family or pair");
    return verify_coeffs(cfg, out);
  }
  if (!cfg.subject.given()) throw UsageError("verify needs --family, --f/--g or --coeffs");
  if (cfg.grid < 2) throw UsageError("--grid must be at least 2");
  const Region region = parse_region(cfg.range, cfg.vrange);
  std::optional<cd> z0;
  if (!cfg.z0.empty()) z0 = parse_scalar(cfg.z0).to_complex();

  const Subject s = load_subject(cfg.subject);
  Json report;
  report["schema_version"] = kReportSchemaVersion;
  report["command"] = "verify";
  report["subject"] = subject_json(s);
  std::vector<CheckResult> checks;

  // Structure and exact identities.
  {
    PairStructure st;
    st.p = s.p;
    st.q = s.q;
    st.r = s.r;
    st.n = s.n;
    const bool ok = st.satisfies_degree_bounds() && (s.surface.degree == s.n || s.planar);
    checks.push_back(exact_identity("structure", ok,
                                    "(p,q,r,n)=(" + std::to_string(s.p) + "," + std::to_string(s.q) +
                                        "," + std::to_string(s.r) + "," + std::to_string(s.n) +
                                        "), surface degree " + std::to_string(s.surface.degree)));
  }
  if (s.exact) {
    const auto phi = integrand(*s.exact);
    checks.push_back(exact_identity("isotropy", check_isotropy(phi).is_zero(), "exact"));
    const auto lap = harmonic_residuals(*s.exact_surface);
    checks.push_back(exact_identity(
        "harmonic", lap[0].is_zero() && lap[1].is_zero() && lap[2].is_zero(), "exact"));
    checks.push_back(exact_identity("isothermal", isothermal_residual(*s.exact_surface).is_zero(), "exact"));
  } else {
    const auto phi = integrand(s.numeric);
    double scale = 0.0;
    for (const auto& p : phi) scale = std::max(scale, max_abs_coeff(p));
    const double iso = scale > 0.0 ? max_abs_coeff(check_isotropy(phi)) / (scale * scale) : 0.0;
    checks.push_back(relative_check("isotropy", iso, tol.float_residual, "float, relative"));
    double sscale = 0.0;
    double lap = 0.0;
    for (const auto& x : s.surface.x) {
      sscale = std::max(sscale, max_abs_coeff(x));
      lap = std::max(lap, max_abs_coeff(x.laplacian()));
    }
    checks.push_back(relative_check("harmonic", sscale > 0.0 ? lap / sscale : 0.0, tol.float_residual,
                                    "float, relative"));
    BivariatePolyD e, g, f;
    double dscale = 0.0;
    for (const auto& x : s.surface.x) {
      const auto xu = x.partial_u();
      const auto xv = x.partial_v();
      dscale = std::max({dscale, max_abs_coeff(xu), max_abs_coeff(xv)});
      e += xu * xu;
      g += xv * xv;
      f += xu * xv;
    }
    const double iso_res =
        dscale > 0.0 ? std::max(max_abs_coeff(e - g), max_abs_coeff(f)) / (dscale * dscale) : 0.0;
    checks.push_back(relative_check("isothermal", iso_res, tol.float_residual, "float, relative"));
  }

  // Degree-5 system.
  if (s.surface.degree > 5) {
    checks.push_back(not_applicable("degree5_system", "surface degree " + std::to_string(s.surface.degree) + " > 5"));
  } else if (s.exact_surface) {
    Degree5Outcome d5 = degree5_exact(extract_coeffs(*s.exact_surface));
    report["degree5_residuals"] = d5.residuals;
    checks.push_back(d5.check);
  } else {
    try {
      Degree5Outcome d5 = degree5_float(extract_coeffs(s.surface), tol.float_residual);
      report["degree5_residuals"] = d5.residuals;
      checks.push_back(d5.check);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotRepresentable) throw;
      checks.push_back({"degree5_system", 1.0, tol.float_residual, false, 0, e.what()});
    }
  }

  // Numeric geometry.
  const ScanReport scan = minimality_scan(PolySurface(s.surface), region, cfg.grid, tol.scan);
  checks.push_back(scan_check(scan));
  Json chart_info;
  for (auto& c : chart_checks_for(s, tol, z0, chart_info)) checks.push_back(std::move(c));
  if (!chart_info.is_null()) report["chart"] = chart_info;

  if (const auto cl = classify(s)) report["classification"] = classification_json(*cl);
  report["tolerance_scale"] = tolerance_scale();

  if (!cfg.json) {
    out << "subject: " << s.label << '\n';
    out << "structure: (p,q,r,n)=(" << s.p << "," << s.q << "," << s.r << "," << s.n << ")\n";
    if (const auto cl = classify(s)) out << "classification: " << cl->summary << '\n';
    for (const auto& n : s.notes) out << "note: " << n << '\n';
  }
  return finish(out, checks, std::move(report), cfg.json, cfg.report);
}

// ---- gen ------------------------------------------------------------------

struct GenConfig {
  SubjectInput subject;
  std::string range;
  std::string vrange;
  std::string res = "41";
  std::string out_dir = ".";
  bool csv = false;
  bool json = false;
};

int cmd_gen(const GenConfig& cfg, std::ostream& out) {
  if (!cfg.subject.given()) throw UsageError("gen needs --family or --f/--g");
  const Region region = parse_region(cfg.range, cfg.vrange);
  const auto [nu, nv] = parse_resolution(cfg.res);
  if (nu < 2 || nv < 2) throw UsageError("resolution must be at least 2 per axis");
  const Subject s = load_subject(cfg.subject);
  MeshGrid mesh;
  try {
    mesh = sample(PolySurface(s.surface), region, nu, nv);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::EmptyMesh) throw;
    out << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  std::filesystem::path dir(cfg.out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  std::string stem;
  if (s.descriptor) {
    stem = mesh_file_name(*s.descriptor, nu, nv, "");
    stem.pop_back();
  } else {
    stem = "pair_" + std::to_string(nu) + (nu == nv ? "" : "x" + std::to_string(nv));
  }
  const auto obj = dir / (stem + ".obj");
  export_obj(mesh, obj);
  Json report;
  report["schema_version"] = kReportSchemaVersion;
  report["command"] = "gen";
  report["subject"] = subject_json(s);
  report["surface_degree"] = s.surface.degree;
  report["vertices"] = mesh.vertices.size();
  report["faces"] = mesh.faces.size();
  report["singular_vertices"] = mesh.singular_count();
  report["obj"] = obj.string();
  if (cfg.csv) {
    const auto csv = dir / (stem + ".csv");
    export_csv(mesh, csv);
    report["csv"] = csv.string();
  }
  if (cfg.json) {
    out << report.dump(2) << '\n';
  } else {
    out << "family: " << s.label << '\n';
    out << "surface degree: " << s.surface.degree << '\n';
    out << "structure: (p,q,r,n)=(" << s.p << "," << s.q << "," << s.r << "," << s.n << ")\n";
    out << "singular vertices: " << mesh.singular_count() << '\n';
    for (const auto& n : s.notes) out << "note: " << n << '\n';
    out << "wrote " << obj.string() << " (" << mesh.vertices.size() << " vertices, "
        << mesh.faces.size() << " faces)\n";
    if (cfg.csv) out << "wrote " << report["csv"].get<std::string>() << '\n';
  }
  return kExitPass;
}

// ---- compare --------------------------------------------------------------

struct CompareConfig {
  SubjectInput a;
  SubjectInput b;
  bool json = false;
};

// Descriptor used for cross-family rules: the given family, or the normal
// form of an explicit pair.
std::optional<FamilyDescriptor> family_view(const Subject& s) {
  if (s.descriptor && s.descriptor->is_exact() &&
      (s.descriptor->kind == FamilyKind::R12 || s.descriptor->kind == FamilyKind::R3))
    return s.descriptor;
  if (const auto cl = classify(s); cl && !cl->mirrored && cl->normal_form && cl->normal_form->is_exact())
    return cl->normal_form;
  return std::nullopt;
}

bool mirrored_equal(const SurfacePolynomial& a, const SurfacePolynomial& b) {
  return -a.x[0] == b.x[0] && a.x[1] == b.x[1] && a.x[2] == b.x[2];
}

bool equal_surfaces(const SurfacePolynomial& a, const SurfacePolynomial& b) {
  return a.x[0] == b.x[0] && a.x[1] == b.x[1] && a.x[2] == b.x[2];
}

struct Verdict {
  std::string verdict;  // distinct, coincident, identical, mirror-congruent, congruent, undetermined
  std::string text;
  Json details = Json::object();
};

// r12 view `p` against r3 view `q`.
Verdict r12_vs_r3(const FamilyDescriptor& p, const FamilyDescriptor& q) {
  const ExactComplex a = p.exact("a");
  const ExactComplex b = p.exact("b");
  const ExactComplex c = p.exact("c");
  const ExactComplex d = p.exact("d");
  const Coincidence co = coincidence_r12_r3(b, c, d, a);
  Verdict v;
  const std::string pred = to_string(ParamValue(co.predicate));
  v.details["predicate"] = {{"expression", "b^2c+d"}, {"value", pred}};
  if (!co.coincident) {
    v.verdict = "distinct";
    v.text = "distinct (b²c+d=" + pred + "≠0)";
    return v;
  }
  const ComplexPoly& rf = co.reduced->f();
  v.details["reduced_pair"] = {{"f", format_poly(rf)},
                               {"g", format_poly(co.reduced->g().numerator())},
                               {"r3", to_string(*co.r3)}};
  // Same surface up to the Moebius branch iff B = 0 and a unit lambda has
  // C = lambda C0 and A lambda^4 = A0, (A0, 0, C0) the reduced normal form.
  const ExactComplex A0 = co.r3->exact("a");
  const ExactComplex C0 = co.r3->exact("c");
  const ExactComplex A = q.exact("a");
  const ExactComplex B = q.exact("b");
  const ExactComplex C = q.exact("c");
  bool related = B.is_zero();
  if (related) {
    if (!C0.is_zero()) {
      const ExactComplex lambda = C / C0;
      const ExactComplex l2 = lambda * lambda;
      related = lambda.norm() == 1 && A * l2 * l2 == A0;
    } else {
      related = C.is_zero() && (A0 / A).norm() == 1;
    }
  }
  v.details["relations_hold"] = related;
  if (related) {
    v.verdict = "coincident";
    v.text = "coincident (predicate): reduced case-3 pair f=" + format_poly(rf) +
             ", g=" + format_poly(co.reduced->g().numerator()) + " = " + to_string(*co.r3);
  } else {
    v.verdict = "undetermined";
    v.text = "undetermined by implemented criteria (b²c+d=0, reduced pair " + to_string(*co.r3) +
             ", but the Moebius-branch relations with " + to_string(q) + " fail)";
  }
  return v;
}

int cmd_compare(const CompareConfig& cfg, std::ostream& out) {
  if (!cfg.a.given() || !cfg.b.given())
    throw UsageError("compare needs both --a-family/--a-f and --b-family/--b-f inputs");
  const Subject sa = load_subject(cfg.a);
  const Subject sb = load_subject(cfg.b);

  const bool identical = sa.exact_surface && sb.exact_surface &&
                         equal_surfaces(*sa.exact_surface, *sb.exact_surface);
  const bool mirror = sa.exact_surface && sb.exact_surface &&
                      mirrored_equal(*sa.exact_surface, *sb.exact_surface);
  const auto va = family_view(sa);
  const auto vb = family_view(sb);
  Verdict v;
  if (va && vb && va->kind == FamilyKind::R12 && vb->kind == FamilyKind::R3) {
    v = r12_vs_r3(*va, *vb);
  } else if (va && vb && va->kind == FamilyKind::R3 && vb->kind == FamilyKind::R12) {
    v = r12_vs_r3(*vb, *va);
  } else if (identical) {
    v = {"identical", "identical (equal surface polynomials)"};
  } else if (mirror) {
    v = {"mirror-congruent", "mirror-congruent (B = A reflected in the plane x1=0)"};
  } else if (va && vb && to_string(*va) == to_string(*vb)) {
    v = {"congruent", "congruent (same normal form " + to_string(*va) + ")"};
  } else {
    v = {"undetermined", "undetermined by implemented criteria"};
  }
  v.details["identical"] = identical;
  v.details["mirror"] = mirror;

  // Canonical energy of both g at common sample points; informational.
  Json fp = Json::array();
  double worst = 0.0;
  const NumericRationalFunction ga = sa.numeric.g();
  const NumericRationalFunction gb = sb.numeric.g();
  for (int k = 0; k < 8; ++k) {
    const cd z = 0.1 + std::polar(0.5, 2.0 * M_PI * k / 8.0);
    try {
      const double ea = canonical_energy(ga, z);
      const double eb = canonical_energy(gb, z);
      worst = std::max(worst, std::abs(ea - eb) / std::max(ea, eb));
      fp.push_back({{"z", {z.real(), z.imag()}}, {"a", ea}, {"b", eb}});
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::CriticalPoint) throw;
    }
  }

  Json report;
  report["schema_version"] = kReportSchemaVersion;
  report["command"] = "compare";
  report["a"] = subject_json(sa);
  report["b"] = subject_json(sb);
  if (const auto cl = classify(sa)) report["a"]["classification"] = classification_json(*cl);
  if (const auto cl = classify(sb)) report["b"]["classification"] = classification_json(*cl);
  report["verdict"] = v.verdict;
  report["summary"] = v.text;
  for (const auto& [k, val] : v.details.items()) report[k] = val;
  report["energy_fingerprint"] = {{"points", fp}, {"max_relative_difference", worst}};

  if (cfg.json) {
    out << report.dump(2) << '\n';
  } else {
    auto line = [&](const char* tag, const Subject& s) {
      out << tag << s.label;
      if (const auto cl = classify(s)) out << " (" << cl->summary << ")";
      out << '\n';
    };
    line("A: ", sa);
    line("B: ", sb);
    if (report.contains("predicate"))
      out << "b^2c+d = " << report["predicate"]["value"].get<std::string>() << '\n';
    out << "energy fingerprint: max relative difference " << fmt(worst) << " over "
        << fp.size() << " common points\n";
    out << "verdict: " << v.text << '\n';
  }
  return kExitPass;
}

// ---- families -------------------------------------------------------------

int cmd_families(bool json, std::ostream& out) {
  struct Entry {
    FamilyKind kind;
    const char* form;
    const char* conditions;
  };
  const Entry entries[] = {
      {FamilyKind::R11, "f = a, g = z^2 + b", "a != 0"},
      {FamilyKind::R12, "f = a(z+b)^2, g = (cz^2+d)/(z+b)", "a != 0, c != 0"},
      {FamilyKind::R3, "f = az^2 + b, g = z + c", "a != 0"},
      {FamilyKind::XuWangDeg5, "f = 6(e1 - i e2) z^2, g = c z (case 1.2 with b=d=0)",
       "a2 e1 - a1 e2 < 0"},
      {FamilyKind::XuWangOmega, "(-P_n + w P_{n-2}, Q_n + w Q_{n-2}, 2 sqrt(n(n-2)w)/(n-1) P_{n-1})",
       "n >= 3, omega >= 0"},
      {FamilyKind::Enneper, "f = 1, g = z", "none"},
  };
  Json list = Json::array();
  for (const auto& e : entries) {
    Json j;
    j["name"] = std::string(to_string(e.kind));
    j["params"] = family_parameter_names(e.kind);
    j["form"] = e.form;
    j["conditions"] = e.conditions;
    list.push_back(std::move(j));
  }
  if (json) {
    out << Json{{"schema_version", kReportSchemaVersion}, {"families", list}}.dump(2) << '\n';
    return kExitPass;
  }
  for (const auto& j : list) {
    std::string params;
    for (const auto& p : j["params"]) params += (params.empty() ? "" : ",") + p.get<std::string>();
    char buf[512];
    std::snprintf(buf, sizeof buf, "%-8s [%s]  %s  (%s)\n", j["name"].get<std::string>().c_str(),
                  params.c_str(), j["form"].get<std::string>().c_str(),
                  j["conditions"].get<std::string>().c_str());
    out << buf;
  }
  return kExitPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimal surfaces from polynomial Weierstrass data: build, verify, export meshes", "wforge"};
  app.require_subcommand(1);

  GenConfig gen;
  auto* g = app.add_subcommand("gen", "sample a surface and write an OBJ mesh");
  add_subject_options(g, gen.subject);
  g->add_option("--range", gen.range, "parameter range lo,hi for u (and v), default -1,1");
  g->add_option("--vrange", gen.vrange, "separate v range lo,hi");
  g->add_option("--res", gen.res, "grid resolution N or NxM")->capture_default_str();
  g->add_option("--out", gen.out_dir, "output directory")->capture_default_str();
  g->add_flag("--csv", gen.csv, "also write u,v,x,y,z,K,nu CSV");
  g->add_flag("--json", gen.json, "print a JSON summary");

  VerifyConfig ver;
  auto* v = app.add_subcommand("verify", "run exact and numeric minimality checks");
  add_subject_options(v, ver.subject);
  v->add_option("--coeffs", ver.coeffs, "JSON file with coefficient vectors a..k");
  v->add_option("--range", ver.range, "scan range lo,hi, default -1,1");
  v->add_option("--vrange", ver.vrange, "separate v scan range");
  v->add_option("--grid", ver.grid, "scan grid points per axis")->capture_default_str();
  v->add_option("--z0", ver.z0, "start point of the canonical chart, e.g. \"(1,0)\"");
  v->add_flag("--json", ver.json, "print the JSON report");
  v->add_option("--report", ver.report, "also write the JSON report to this file");

  CompareConfig cmp;
  auto* c = app.add_subcommand("compare", "decide whether two degree-5 surfaces coincide");
  add_subject_options(c, cmp.a, "a");
  add_subject_options(c, cmp.b, "b");
  c->add_flag("--json", cmp.json, "print the JSON report");

  bool fam_json = false;
  auto* f = app.add_subcommand("families", "list the family catalog");
  f->add_flag("--json", fam_json, "print JSON");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "wforge: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (g->parsed()) return cmd_gen(gen, out);
    if (v->parsed()) return cmd_verify(ver, out);
    if (c->parsed()) return cmd_compare(cmp, out);
    if (f->parsed()) return cmd_families(fam_json, out);
  } catch (const UsageError& e) {
    err << "wforge: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "wforge: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace wforge::cli
