#include "subject.hpp"

#include <cstdlib>

#include "wforge/text.hpp"

namespace wforge::cli {

namespace {

int degree_or_zero(int d) { return d == kMinusInfinity ? 0 : d; }

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

std::string describe_g(const RationalFunction& g) {
  if (g.is_polynomial()) return format_poly(g.numerator());
  return format_poly(g.numerator()) + " / " + format_poly(g.denominator());
}

}  // namespace

std::vector<std::string> split_top_level(std::string_view text) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : text) {
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
  return out;
}

ParamValue parse_param(std::string_view text) {
  try {
    return parse_scalar(text);
  } catch (const Error&) {
  }
  const std::string s = trim(text);
  char* end = nullptr;
  const double x = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size())
    throw Error(ErrorKind::Parse, "cannot parse parameter \"" + std::string(text) + "\"");
  return std::complex<double>(x, 0.0);
}

FamilyDescriptor parse_descriptor(const SubjectInput& in) {
  FamilyDescriptor d;
  d.kind = parse_family_kind(in.family);
  const auto& names = family_parameter_names(d.kind);
  std::vector<std::string> values = split_top_level(in.params);
  if (d.kind == FamilyKind::XuWangOmega) {
    if (values.empty()) {
      values = {in.n ? std::to_string(*in.n) : "5", in.omega.value_or("1")};
    } else if (in.n || in.omega) {
      throw Error(ErrorKind::Parse, "give xw parameters either with --params or with --n/--omega");
    }
  } else if (in.n || in.omega) {
    throw Error(ErrorKind::Parse, "--n and --omega only apply to the xw family");
  }
  if (values.size() != names.size()) {
    std::string list;
    for (const auto& n : names) list += (list.empty() ? "" : ",") + n;
    throw Error(ErrorKind::InvalidFamily, std::string(to_string(d.kind)) + " expects " +
                                              std::to_string(names.size()) + " parameters (" +
                                              list + "), got " + std::to_string(values.size()));
  }
  for (std::size_t k = 0; k < names.size(); ++k) d.params.emplace_back(names[k], parse_param(values[k]));
  return d;
}

Subject load_subject(const SubjectInput& in) {
  Subject s;
  if (!in.family.empty()) {
    if (!in.f.empty() || !in.g.empty())
      throw Error(ErrorKind::Parse, "give either a family or an explicit (f, g) pair, not both");
    const FamilyDescriptor desc = parse_descriptor(in);
    FamilyInstance inst = make_family(desc);
    s.descriptor = desc;
    s.label = to_string(desc);
    s.exact = inst.exact;
    s.numeric = inst.numeric;
    s.notes = inst.notes;
    s.surface = inst.surface();
  } else {
    if (in.f.empty() || in.g.empty()) throw Error(ErrorKind::Parse, "both --f and --g are required");
    if (!in.params.empty()) throw Error(ErrorKind::Parse, "--params needs --family");
    const RationalFunction f = parse_expression(in.f);
    if (!f.is_polynomial()) throw Error(ErrorKind::Parse, "f must be a polynomial");
    s.exact = validate_pair(f.numerator(), parse_expression(in.g));
    s.numeric = s.exact->numeric();
    s.label = "f=" + format_poly(s.exact->f()) + ", g=" + describe_g(s.exact->g());
  }
  if (s.exact) {
    const PairStructure& st = s.exact->structure();
    s.p = st.p;
    s.q = st.q;
    s.r = st.r;
    s.n = st.n;
    s.exact_surface = real_part_surface(build_curve(*s.exact));
    s.surface = to_numeric(*s.exact_surface);
  } else {
    s.p = degree_or_zero(s.numeric.P.degree());
    s.q = degree_or_zero(s.numeric.Q.degree());
    s.r = degree_or_zero(s.numeric.R.degree());
    s.n = 1 + std::max({2 * s.q + s.r, 2 * s.p + s.r, s.p + s.q + s.r});
  }
  s.planar = s.numeric.P.is_zero() ||
             (s.numeric.P.derivative() * s.numeric.Q - s.numeric.P * s.numeric.Q.derivative()).is_zero();
  return s;
}

}  // namespace wforge::cli
