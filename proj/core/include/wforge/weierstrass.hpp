#pragma once

#include <array>
#include <complex>

#include "wforge/bivariate.hpp"
#include "wforge/rational_function.hpp"

namespace wforge {

/// Degree data of a generating pair f = Q^2 R, g = P/Q.
struct PairStructure {
  ComplexPoly P;
  ComplexPoly Q;
  ComplexPoly R;
  int p = 0;
  int q = 0;
  int r = 0;
  int n = 0;  // surface degree

  // 2q+r <= n-1, 2p+r <= n-1, p+q+r <= n-1, at least one equality.
  bool satisfies_degree_bounds() const;
};

/// Float Weierstrass data f = Q^2 R, g = P/Q. Not validated: P may be zero
/// (planar limit) and nothing is reduced.
struct NumericPair {
  ComplexPolyD P;
  ComplexPolyD Q;
  ComplexPolyD R;

  ComplexPolyD f() const { return Q * Q * R; }
  NumericRationalFunction g() const { return NumericRationalFunction(P, Q); }
};

/// A validated exact generating pair (f, g) with its structure data.
class WeierstrassPair {
 public:
  const ComplexPoly& f() const { return f_; }
  const RationalFunction& g() const { return g_; }
  const PairStructure& structure() const { return s_; }

  NumericPair numeric() const;

  friend WeierstrassPair validate_pair(ComplexPoly f, RationalFunction g);

 private:
  WeierstrassPair(ComplexPoly f, RationalFunction g, PairStructure s)
      : f_(std::move(f)), g_(std::move(g)), s_(std::move(s)) {}

  ComplexPoly f_;
  RationalFunction g_;
  PairStructure s_;
};

// Throws DegenerateInput for f = 0, DegenerateSurface for constant g and
// StructureViolation when Q^2 does not divide f.
WeierstrassPair validate_pair(ComplexPoly f, RationalFunction g);

template <class C>
using PolyTriple = std::array<BasicPoly<C>, 3>;

// (phi1, phi2, phi3) = (R(Q^2-P^2)/2, iR(Q^2+P^2)/2, PQR).
PolyTriple<ExactComplex> integrand(const WeierstrassPair& pair);
PolyTriple<std::complex<double>> integrand(const NumericPair& pair);

// phi1^2 + phi2^2 + phi3^2; the zero polynomial certifies a minimal curve.
template <class C>
BasicPoly<C> check_isotropy(const PolyTriple<C>& phi) {
  return phi[0] * phi[0] + phi[1] * phi[1] + phi[2] * phi[2];
}

/// Psi(z) = integral of the integrand from 0, so Psi(0) = 0.
template <class C>
struct BasicMinimalCurve {
  PolyTriple<C> psi;
};
using MinimalCurve = BasicMinimalCurve<ExactComplex>;
using MinimalCurveD = BasicMinimalCurve<std::complex<double>>;

MinimalCurve build_curve(const WeierstrassPair& pair);
MinimalCurveD build_curve(const NumericPair& pair);

template <class C>
BasicMinimalCurve<C> curve_from_integrand(const PolyTriple<C>& phi) {
  return {{phi[0].integral(), phi[1].integral(), phi[2].integral()}};
}

/// Three bivariate coordinate polynomials x(u, v).
template <class R>
struct BasicSurfacePolynomial {
  std::array<BasicBivariate<R>, 3> x;
  int degree = kMinusInfinity;

  std::array<double, 3> evaluate(double u, double v) const {
    return {x[0](u, v), x[1](u, v), x[2](u, v)};
  }
};
using SurfacePolynomial = BasicSurfacePolynomial<Rational>;
using SurfacePolynomialD = BasicSurfacePolynomial<double>;

SurfacePolynomialD to_numeric(const SurfacePolynomial& s);

// x(u,v) = Re Psi(u+iv) and the conjugate y(u,v) = Im Psi(u+iv).
SurfacePolynomial real_part_surface(const MinimalCurve& curve);
SurfacePolynomial imaginary_part_surface(const MinimalCurve& curve);
SurfacePolynomialD real_part_surface(const MinimalCurveD& curve);
SurfacePolynomialD imaginary_part_surface(const MinimalCurveD& curve);

// x cos t + y sin t, evaluated in floating point.
SurfacePolynomialD associated_surface(const MinimalCurve& curve, double t);
SurfacePolynomialD associated_surface(const MinimalCurveD& curve, double t);

// Laplacians of the three coordinates; all zero for a harmonic surface.
std::array<BivariatePoly, 3> harmonic_residuals(const SurfacePolynomial& s);

/// E - G and F formed exactly from the first-derivative polynomials.
struct IsothermalResidual {
  BivariatePoly e_minus_g;
  BivariatePoly f;
  bool is_zero() const { return e_minus_g.is_zero() && f.is_zero(); }
};
IsothermalResidual isothermal_residual(const SurfacePolynomial& s);

}  // namespace wforge
