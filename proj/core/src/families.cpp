#include "wforge/families.hpp"

#include <cmath>
#include <cstdio>

namespace wforge {

namespace {

using cd = std::complex<double>;

ComplexPoly lin(const ExactComplex& c1, const ExactComplex& c0) { return ComplexPoly({c0, c1}); }
ComplexPoly quad(const ExactComplex& c2, const ExactComplex& c1, const ExactComplex& c0) {
  return ComplexPoly({c0, c1, c2});
}
ComplexPolyD lin_d(cd c1, cd c0) { return ComplexPolyD({c0, c1}); }
ComplexPolyD quad_d(cd c2, cd c1, cd c0) { return ComplexPolyD({c0, c1, c2}); }

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void require_nonzero(const FamilyDescriptor& desc, std::string_view name) {
  const bool zero = std::visit(
      [](const auto& v) {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, ExactComplex>)
          return v.is_zero();
        else
          return v == cd(0.0, 0.0);
      },
      desc.get(name));
  if (zero)
    throw Error(ErrorKind::InvalidFamily, std::string(to_string(desc.kind)) + " requires " +
                                              std::string(name) + " != 0");
}

FamilyDescriptor make_desc(FamilyKind kind, std::vector<std::pair<std::string, ExactComplex>> p) {
  FamilyDescriptor d;
  d.kind = kind;
  for (auto& [n, v] : p) d.params.emplace_back(n, std::move(v));
  return d;
}

int integer_param(const FamilyDescriptor& desc, std::string_view name) {
  const auto* v = std::get_if<ExactComplex>(&desc.get(name));
  if (!v || !v->is_real() || v->re().get_den() != 1 || !v->re().get_num().fits_sint_p())
    throw Error(ErrorKind::InvalidFamily, std::string(name) + " must be an integer");
  return static_cast<int>(v->re().get_num().get_si());
}

double real_param(const FamilyDescriptor& desc, std::string_view name) {
  const cd v = desc.numeric(name);
  if (v.imag() != 0.0)
    throw Error(ErrorKind::InvalidFamily, std::string(name) + " must be real");
  return v.real();
}

}  // namespace

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::R11: return "r11";
    case FamilyKind::R12: return "r12";
    case FamilyKind::R3: return "r3";
    case FamilyKind::XuWangDeg5: return "xw5";
    case FamilyKind::XuWangOmega: return "xw";
    case FamilyKind::Enneper: return "enneper";
  }
  return "unknown";
}

FamilyKind parse_family_kind(std::string_view name) {
  if (name == "r11" || name == "R11") return FamilyKind::R11;
  if (name == "r12" || name == "R12") return FamilyKind::R12;
  if (name == "r3" || name == "R3") return FamilyKind::R3;
  if (name == "xw5" || name == "XuWangDeg5") return FamilyKind::XuWangDeg5;
  if (name == "xw" || name == "XuWangOmega") return FamilyKind::XuWangOmega;
  if (name == "enneper" || name == "Enneper") return FamilyKind::Enneper;
  throw Error(ErrorKind::InvalidFamily, "unknown family \"" + std::string(name) + "\"");
}

const std::vector<std::string>& family_parameter_names(FamilyKind kind) {
  static const std::vector<std::string> r11_names = {"a", "b"};
  static const std::vector<std::string> r12_names = {"a", "b", "c", "d"};
  static const std::vector<std::string> r3_names = {"a", "b", "c"};
  static const std::vector<std::string> xw5_names = {"a1", "a2", "e1", "e2"};
  static const std::vector<std::string> xw_names = {"n", "omega"};
  static const std::vector<std::string> none;
  switch (kind) {
    case FamilyKind::R11: return r11_names;
    case FamilyKind::R12: return r12_names;
    case FamilyKind::R3: return r3_names;
    case FamilyKind::XuWangDeg5: return xw5_names;
    case FamilyKind::XuWangOmega: return xw_names;
    case FamilyKind::Enneper: return none;
  }
  return none;
}

bool FamilyDescriptor::is_exact() const {
  for (const auto& [n, v] : params)
    if (!std::holds_alternative<ExactComplex>(v)) return false;
  return true;
}

const ParamValue& FamilyDescriptor::get(std::string_view name) const {
  for (const auto& [n, v] : params)
    if (n == name) return v;
  throw Error(ErrorKind::InvalidFamily, std::string(to_string(kind)) + " is missing parameter " +
                                            std::string(name));
}

ExactComplex FamilyDescriptor::exact(std::string_view name) const {
  const auto* v = std::get_if<ExactComplex>(&get(name));
  if (!v) throw Error(ErrorKind::InvalidFamily, "parameter " + std::string(name) + " is not exact");
  return *v;
}

std::complex<double> FamilyDescriptor::numeric(std::string_view name) const {
  return std::visit([](const auto& v) { return to_numeric(v); }, get(name));
}

std::string to_string(const ParamValue& v) {
  if (const auto* e = std::get_if<ExactComplex>(&v))
    return e->is_real() ? to_string(e->re()) : to_string(*e);
  const cd z = std::get<cd>(v);
  if (z.imag() == 0.0) return format_double(z.real());
  return "(" + format_double(z.real()) + "," + format_double(z.imag()) + ")";
}

FamilyDescriptor r11(ExactComplex a, ExactComplex b) {
  return make_desc(FamilyKind::R11, {{"a", std::move(a)}, {"b", std::move(b)}});
}

FamilyDescriptor r12(ExactComplex a, ExactComplex b, ExactComplex c, ExactComplex d) {
  return make_desc(FamilyKind::R12,
                   {{"a", std::move(a)}, {"b", std::move(b)}, {"c", std::move(c)}, {"d", std::move(d)}});
}

FamilyDescriptor r3(ExactComplex a, ExactComplex b, ExactComplex c) {
  return make_desc(FamilyKind::R3, {{"a", std::move(a)}, {"b", std::move(b)}, {"c", std::move(c)}});
}

FamilyDescriptor enneper() { return make_desc(FamilyKind::Enneper, {}); }

SurfacePolynomialD FamilyInstance::surface() const {
  if (exact) return to_numeric(real_part_surface(build_curve(*exact)));
  if (descriptor.kind == FamilyKind::XuWangOmega)
    return xu_wang_surface(integer_param(descriptor, "n"), real_param(descriptor, "omega"));
  return real_part_surface(build_curve(numeric));
}

FamilyInstance make_family(const FamilyDescriptor& desc) {
  FamilyInstance inst;
  inst.descriptor = desc;
  const ComplexPoly z = ComplexPoly::z();
  const ExactComplex one(1);
  switch (desc.kind) {
    case FamilyKind::Enneper: {
      inst.exact = validate_pair(ComplexPoly::constant(one), RationalFunction(z));
      break;
    }
    case FamilyKind::R11: {
      require_nonzero(desc, "a");
      if (desc.is_exact()) {
        inst.exact = validate_pair(ComplexPoly::constant(desc.exact("a")),
                                   RationalFunction(quad(one, 0, desc.exact("b"))));
      } else {
        inst.numeric = {quad_d(1.0, 0.0, desc.numeric("b")), ComplexPolyD::constant(1.0),
                        ComplexPolyD::constant(desc.numeric("a"))};
      }
      break;
    }
    case FamilyKind::R12: {
      require_nonzero(desc, "a");
      require_nonzero(desc, "c");
      if (desc.is_exact()) {
        const ExactComplex a = desc.exact("a");
        const ExactComplex b = desc.exact("b");
        const ExactComplex c = desc.exact("c");
        const ExactComplex d = desc.exact("d");
        const ComplexPoly zb = lin(one, b);
        inst.exact =
            validate_pair(zb * zb * a, RationalFunction(quad(c, 0, d), zb));
        if ((b * b * c + d).is_zero())
          inst.notes.push_back("b^2c+d=0: g reduces to c(z-b) and the surface is also in case 3");
      } else {
        const cd b = desc.numeric("b");
        inst.numeric = {quad_d(desc.numeric("c"), 0.0, desc.numeric("d")), lin_d(1.0, b),
                        ComplexPolyD::constant(desc.numeric("a"))};
      }
      break;
    }
    case FamilyKind::R3: {
      require_nonzero(desc, "a");
      if (desc.is_exact()) {
        inst.exact = validate_pair(quad(desc.exact("a"), 0, desc.exact("b")),
                                   RationalFunction(lin(one, desc.exact("c"))));
      } else {
        inst.numeric = {lin_d(1.0, desc.numeric("c")), ComplexPolyD::constant(1.0),
                        quad_d(desc.numeric("a"), 0.0, desc.numeric("b"))};
      }
      break;
    }
    case FamilyKind::XuWangDeg5: {
      XuWangDegree5 xw = xw_degree5(real_param(desc, "a1"), real_param(desc, "a2"),
                                    real_param(desc, "e1"), real_param(desc, "e2"));
      inst.numeric = xw.pair;
      inst.notes.push_back("belongs to case 1.2 with b=d=0");
      break;
    }
    case FamilyKind::XuWangOmega: {
      const int n = integer_param(desc, "n");
      const double omega = real_param(desc, "omega");
      inst.numeric = xu_wang_pair(n, omega);
      if (omega == 0.0) inst.notes.push_back("omega=0: third coordinate vanishes (planar map)");
      break;
    }
  }
  if (inst.exact) inst.numeric = inst.exact->numeric();
  return inst;
}

std::pair<BivariatePoly, BivariatePoly> xu_wang_basis(int n) {
  if (n < 1) throw Error(ErrorKind::Domain, "xu_wang_basis needs n >= 1");
  auto binom = [](int top, int k) {
    if (k < 0 || k > top) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(k));
    return Rational(b);
  };
  BivariatePoly P;
  BivariatePoly Q;
  const int p_top = n / 2;        // ceil((n-1)/2)
  const int q_top = (n - 1) / 2;  // floor((n-1)/2)
  for (int k = 0; k <= p_top; ++k) {
    Rational c = binom(n, 2 * k);
    if (k % 2) c = -c;
    if (n - 2 * k >= 0) P.add(n - 2 * k, 2 * k, c);
  }
  for (int k = 0; k <= q_top; ++k) {
    Rational c = binom(n, 2 * k + 1);
    if (k % 2) c = -c;
    Q.add(n - 2 * k - 1, 2 * k + 1, c);
  }
  return {std::move(P), std::move(Q)};
}

SurfacePolynomialD xu_wang_surface(int n, double omega) {
  if (n < 3) throw Error(ErrorKind::Domain, "xu_wang_surface needs n >= 3");
  if (!(omega >= 0.0)) throw Error(ErrorKind::Domain, "xu_wang_surface needs omega >= 0");
  const auto [pn, qn] = xu_wang_basis(n);
  const auto [pm, qm] = xu_wang_basis(n - 2);
  const auto [pl, ql] = xu_wang_basis(n - 1);
  const double kappa = 2.0 * std::sqrt(static_cast<double>(n) * (n - 2) * omega) / (n - 1);
  SurfacePolynomialD s;
  s.x[0] = to_numeric(pm) * omega - to_numeric(pn);
  s.x[1] = to_numeric(qn) + to_numeric(qm) * omega;
  s.x[2] = to_numeric(pl) * kappa;
  s.degree = std::max({s.x[0].degree(), s.x[1].degree(), s.x[2].degree()});
  return s;
}

NumericPair xu_wang_pair(int n, double omega) {
  if (n < 3) throw Error(ErrorKind::Domain, "xu_wang_pair needs n >= 3");
  if (!(omega >= 0.0)) throw Error(ErrorKind::Domain, "xu_wang_pair needs omega >= 0");
  // f = Q^2 R with Q = z, R = -2n z^{n-3}; g = P/Q with constant P.
  const double c = -std::sqrt(static_cast<double>(n) * (n - 2) * omega) / n;
  return {ComplexPolyD::constant(c), ComplexPolyD::z(),
          ComplexPolyD::monomial(cd(-2.0 * n, 0.0), n - 3)};
}

XuWangDegree5 xw_degree5(double a1, double a2, double e1, double e2) {
  const double side = a2 * e1 - a1 * e2;
  if (!(side < 0.0))
    throw Error(ErrorKind::NotMinimal, "xw_degree5 requires a2*e1 - a1*e2 < 0 (got " +
                                           format_double(side) + ")");
  const double s = std::sqrt((a1 * a1 + a2 * a2) * (e1 * e1 + e2 * e2));
  const double m = a1 * e1 + a2 * e2;
  const cd ec(e1, -e2);
  const cd root(std::sqrt(std::max(s - m, 0.0)), std::sqrt(std::max(s + m, 0.0)));
  XuWangDegree5 out;
  out.f_coeff = 6.0 * ec;
  out.g_coeff = std::sqrt(5.0 / 6.0) * root / ec;
  out.pair = {ComplexPolyD::monomial(out.g_coeff, 1), ComplexPolyD::constant(1.0),
              ComplexPolyD::monomial(out.f_coeff, 2)};
  out.r12.kind = FamilyKind::R12;
  out.r12.params = {{"a", out.f_coeff}, {"b", ExactComplex(0)}, {"c", out.g_coeff},
                    {"d", ExactComplex(0)}};
  return out;
}

std::pair<ComplexPoly, RationalFunction> affine_normalize(const ComplexPoly& f,
                                                          const RationalFunction& g,
                                                          const ExactComplex& alpha,
                                                          const ExactComplex& beta) {
  if (alpha.is_zero()) throw Error(ErrorKind::InvalidTransform, "affine map needs alpha != 0");
  const ComplexPoly inner = lin(alpha, beta);
  return {f.compose(inner) * alpha, g.compose(inner)};
}

QuadraticNormalizer quadratic_normalizer(const RationalFunction& g) {
  if (!g.is_polynomial() || g.numerator().degree() != 2)
    throw Error(ErrorKind::Domain, "quadratic_normalizer needs a quadratic polynomial g");
  const ComplexPoly& p = g.numerator();
  const ExactComplex A = p.coeff(2);
  const ExactComplex B = p.coeff(1);
  const ExactComplex C = p.coeff(0);
  QuadraticNormalizer out;
  const ExactComplex inv = ExactComplex(1) / A;
  out.alpha_exact = exact_sqrt(inv);
  out.alpha = out.alpha_exact ? out.alpha_exact->to_complex() : std::sqrt(inv.to_complex());
  out.beta = -B / (ExactComplex(2) * A);
  out.constant = C - B * B / (ExactComplex(4) * A);
  return out;
}

WeierstrassPair symmetry_transform(const WeierstrassPair& pair) {
  if (pair.g().is_zero()) throw Error(ErrorKind::InvalidTransform, "g must be nonzero");
  const RationalFunction fg2 = RationalFunction(pair.f()) * pair.g() * pair.g();
  if (!fg2.is_polynomial())
    throw Error(ErrorKind::StructureViolation, "f g^2 is not a polynomial");
  ComplexPoly f = fg2.numerator() * (ExactComplex(1) / fg2.denominator().leading());
  return validate_pair(std::move(f), pair.g().reciprocal());
}

RationalFunction moebius_transform(const RationalFunction& g, const ExactComplex& alpha) {
  const ComplexPoly& P = g.numerator();
  const ComplexPoly& Q = g.denominator();
  ComplexPoly den = Q - P * alpha.conj();
  if (den.is_zero())
    throw Error(ErrorKind::InvalidTransform, "1 - conj(alpha) g vanishes identically");
  return RationalFunction(Q * alpha + P, std::move(den));
}

NumericRationalFunction moebius_transform(const RationalFunction& g, const ExactComplex& alpha,
                                          double phi) {
  const RationalFunction base = moebius_transform(g, alpha);
  const cd rot = std::polar(1.0, phi);
  return NumericRationalFunction(to_numeric(base.numerator()) * rot,
                                 to_numeric(base.denominator()));
}

RationalFunction inversion_transform(const RationalFunction& g) {
  if (g.is_zero()) throw Error(ErrorKind::InvalidTransform, "cannot invert g = 0");
  return g.reciprocal();
}

NumericRationalFunction inversion_transform(const RationalFunction& g, double phi) {
  const RationalFunction base = inversion_transform(g);
  return NumericRationalFunction(to_numeric(base.numerator()) * std::polar(1.0, phi),
                                 to_numeric(base.denominator()));
}

Coincidence coincidence_r12_r3(const ExactComplex& b, const ExactComplex& c,
                               const ExactComplex& d, const ExactComplex& a) {
  if (c.is_zero()) throw Error(ErrorKind::InvalidFamily, "r12 requires c != 0");
  Coincidence out;
  out.predicate = b * b * c + d;
  out.coincident = out.predicate.is_zero();
  if (out.coincident) {
    const ExactComplex one(1);
    const ComplexPoly zb = lin(one, b);
    out.reduced = validate_pair(zb * zb * a, RationalFunction(lin(c, -(b * c))));
    out.r3 = r3(a / (c * c * c), ExactComplex(0), -(ExactComplex(2) * b * c));
  }
  return out;
}

namespace {

std::string describe(const FamilyDescriptor& d) {
  std::string s(to_string(d.kind));
  s += "[";
  for (std::size_t k = 0; k < d.params.size(); ++k) {
    if (k) s += ",";
    s += to_string(d.params[k].second);
  }
  return s + "]";
}

// Direct (unmirrored) classification; label empty when no case matches.
Classification classify_direct(const WeierstrassPair& pair) {
  const PairStructure& s = pair.structure();
  Classification out;
  if (s.n != 5) return out;
  const ExactComplex two(2);
  if (s.p == 2 && s.q == 0 && s.r == 0) {
    out.label = "1.1";
    const QuadraticNormalizer nz = quadratic_normalizer(pair.g());
    const ExactComplex a = s.R.coeff(0);
    FamilyDescriptor d;
    d.kind = FamilyKind::R11;
    if (nz.alpha_exact)
      d.params = {{"a", a * *nz.alpha_exact}, {"b", nz.constant}};
    else
      d.params = {{"a", a.to_complex() * nz.alpha}, {"b", nz.constant}};
    out.normal_form = d;
  } else if (s.p == 2 && s.q == 1 && s.r == 0) {
    out.label = "1.2";
    const ExactComplex c2 = s.P.coeff(2);
    const ExactComplex c1 = s.P.coeff(1);
    const ExactComplex c0 = s.P.coeff(0);
    const ExactComplex beta = -c1 / (two * c2);
    out.normal_form = r12(s.R.coeff(0), s.Q.coeff(0) + beta, c2, c2 * beta * beta + c1 * beta + c0);
  } else if (s.p == 1 && s.q == 0 && s.r == 2) {
    out.label = "3";
    const ExactComplex r2 = s.R.coeff(2);
    const ExactComplex r1 = s.R.coeff(1);
    const ExactComplex r0 = s.R.coeff(0);
    const ExactComplex c1 = s.P.coeff(1);
    const ExactComplex c0 = s.P.coeff(0);
    const ExactComplex A = r2 / (c1 * c1 * c1);
    const ExactComplex B = (r0 - r1 * r1 / (ExactComplex(4) * r2)) / c1;
    const ExactComplex C = c0 - c1 * r1 / (two * r2);
    out.normal_form = r3(A, B, C);
    if (B.is_zero()) {
      const ExactComplex b = -C / two;
      out.also = r12(A, b, ExactComplex(1), -(b * b));
    }
  } else {
    return out;
  }
  out.summary = "case " + out.label + " " + describe(*out.normal_form);
  if (out.also) {
    const bool bd_zero = out.also->exact("b").is_zero();
    out.summary += bd_zero ? "; also case 1.2 with b=d=0 " : "; also case 1.2 with b^2c+d=0 ";
    out.summary += describe(*out.also);
  }
  return out;
}

}  // namespace

Classification classify_pair(const WeierstrassPair& pair) {
  const PairStructure& s = pair.structure();
  Classification direct = classify_direct(pair);
  if (!direct.label.empty()) return direct;
  if (s.n == 5 && ((s.p == 0 && s.q == 2 && s.r == 0) || (s.p == 1 && s.q == 2 && s.r == 0) ||
                   (s.p == 0 && s.q == 1 && s.r == 2))) {
    Classification m = classify_direct(symmetry_transform(pair));
    Classification out;
    out.mirrored = true;
    out.label = m.label == "1.1" ? "2.1" : m.label == "1.2" ? "2.2" : "4";
    out.normal_form = m.normal_form;
    out.also = m.also;
    out.summary = "case " + out.label + " (mirror of " + m.summary + ")";
    return out;
  }
  Classification out;
  out.label = "other";
  out.summary = "degree " + std::to_string(s.n) + " with (p,q,r)=(" + std::to_string(s.p) + "," +
                std::to_string(s.q) + "," + std::to_string(s.r) + ")";
  return out;
}

std::string to_string(const FamilyDescriptor& d) { return describe(d); }

}  // namespace wforge
