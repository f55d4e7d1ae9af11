#include "wforge/weierstrass.hpp"

#include <cmath>

namespace wforge {

bool PairStructure::satisfies_degree_bounds() const {
  const int a = 2 * q + r;
  const int b = 2 * p + r;
  const int c = p + q + r;
  const int m = n - 1;
  return a <= m && b <= m && c <= m && (a == m || b == m || c == m);
}

WeierstrassPair validate_pair(ComplexPoly f, RationalFunction g) {
  if (f.is_zero()) throw Error(ErrorKind::DegenerateInput, "f must be a nonzero polynomial");
  if (g.is_constant())
    throw Error(ErrorKind::DegenerateSurface, "constant g generates a plane");
  PairStructure s;
  s.P = g.numerator();
  s.Q = g.denominator();
  auto [R, rem] = f.divmod(s.Q * s.Q);
  if (!rem.is_zero())
    throw Error(ErrorKind::StructureViolation,
                "f is not divisible by the square of the denominator of g");
  s.R = std::move(R);
  s.p = s.P.degree();
  s.q = s.Q.degree();
  s.r = s.R.degree();
  s.n = 1 + std::max({2 * s.q + s.r, 2 * s.p + s.r, s.p + s.q + s.r});
  return WeierstrassPair(std::move(f), std::move(g), std::move(s));
}

NumericPair WeierstrassPair::numeric() const {
  return {to_numeric(s_.P), to_numeric(s_.Q), to_numeric(s_.R)};
}

namespace {

template <class C>
PolyTriple<C> integrand_from(const BasicPoly<C>& P, const BasicPoly<C>& Q, const BasicPoly<C>& R,
                             const C& half, const C& half_i) {
  const BasicPoly<C> q2r = Q * Q * R;
  const BasicPoly<C> p2r = P * P * R;
  return {(q2r - p2r) * half, (q2r + p2r) * half_i, P * Q * R};
}

template <class R>
int surface_degree(const std::array<BasicBivariate<R>, 3>& x) {
  return std::max({x[0].degree(), x[1].degree(), x[2].degree()});
}

template <class C, class Part>
auto part_surface(const BasicMinimalCurve<C>& curve, Part part) {
  BasicSurfacePolynomial<RealScalarT<C>> s;
  for (int k = 0; k < 3; ++k) s.x[k] = part(substitute_complex(curve.psi[k]));
  s.degree = surface_degree(s.x);
  return s;
}

SurfacePolynomialD combine(const SurfacePolynomialD& x, const SurfacePolynomialD& y, double t) {
  SurfacePolynomialD s;
  const double c = std::cos(t);
  const double sn = std::sin(t);
  for (int k = 0; k < 3; ++k) s.x[k] = x.x[k] * c + y.x[k] * sn;
  s.degree = surface_degree(s.x);
  return s;
}

}  // namespace

PolyTriple<ExactComplex> integrand(const WeierstrassPair& pair) {
  const auto& s = pair.structure();
  return integrand_from(s.P, s.Q, s.R, ExactComplex(Rational(1, 2)),
                        ExactComplex(Rational(0), Rational(1, 2)));
}

PolyTriple<std::complex<double>> integrand(const NumericPair& pair) {
  return integrand_from(pair.P, pair.Q, pair.R, std::complex<double>(0.5, 0.0),
                        std::complex<double>(0.0, 0.5));
}

MinimalCurve build_curve(const WeierstrassPair& pair) { return curve_from_integrand(integrand(pair)); }

MinimalCurveD build_curve(const NumericPair& pair) { return curve_from_integrand(integrand(pair)); }

SurfacePolynomialD to_numeric(const SurfacePolynomial& s) {
  SurfacePolynomialD out;
  for (int k = 0; k < 3; ++k) out.x[k] = to_numeric(s.x[k]);
  out.degree = surface_degree(out.x);
  return out;
}

SurfacePolynomial real_part_surface(const MinimalCurve& curve) {
  return part_surface(curve, [](auto&& ri) { return std::move(ri.first); });
}

SurfacePolynomial imaginary_part_surface(const MinimalCurve& curve) {
  return part_surface(curve, [](auto&& ri) { return std::move(ri.second); });
}

SurfacePolynomialD real_part_surface(const MinimalCurveD& curve) {
  return part_surface(curve, [](auto&& ri) { return std::move(ri.first); });
}

SurfacePolynomialD imaginary_part_surface(const MinimalCurveD& curve) {
  return part_surface(curve, [](auto&& ri) { return std::move(ri.second); });
}

SurfacePolynomialD associated_surface(const MinimalCurve& curve, double t) {
  return combine(to_numeric(real_part_surface(curve)), to_numeric(imaginary_part_surface(curve)), t);
}

SurfacePolynomialD associated_surface(const MinimalCurveD& curve, double t) {
  return combine(real_part_surface(curve), imaginary_part_surface(curve), t);
}

std::array<BivariatePoly, 3> harmonic_residuals(const SurfacePolynomial& s) {
  return {s.x[0].laplacian(), s.x[1].laplacian(), s.x[2].laplacian()};
}

IsothermalResidual isothermal_residual(const SurfacePolynomial& s) {
  BivariatePoly e;
  BivariatePoly g;
  BivariatePoly f;
  for (int k = 0; k < 3; ++k) {
    const BivariatePoly xu = s.x[k].partial_u();
    const BivariatePoly xv = s.x[k].partial_v();
    e += xu * xu;
    g += xv * xv;
    f += xu * xv;
  }
  return {e - g, f};
}

}  // namespace wforge
