#pragma once

#include <complex>

#include "wforge/poly.hpp"

namespace wforge {

/// Reduced quotient numerator/denominator of exact complex polynomials.
///
/// Construction divides out the gcd and makes the denominator monic, so two
/// equal functions always have identical coefficient vectors.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(ComplexPoly::constant(ExactComplex(1))) {}
  RationalFunction(ComplexPoly numerator, ComplexPoly denominator);
  // Polynomial as a rational function with denominator 1.
  RationalFunction(ComplexPoly numerator);

  const ComplexPoly& numerator() const { return num_; }
  const ComplexPoly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  bool is_polynomial() const { return den_.degree() == 0; }

  RationalFunction derivative() const;
  // 1/g; throws Domain for the zero function.
  RationalFunction reciprocal() const;
  // g(inner(z)) for a polynomial inner map.
  RationalFunction compose(const ComplexPoly& inner) const;

  std::complex<double> operator()(std::complex<double> z) const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  ComplexPoly num_;
  ComplexPoly den_;
};

/// Unreduced float quotient, used where coefficients leave Q(i)
/// (rotations by e^{i phi}, square roots of parameters).
class NumericRationalFunction {
 public:
  NumericRationalFunction() : den_(ComplexPolyD::constant(1.0)) {}
  NumericRationalFunction(ComplexPolyD numerator, ComplexPolyD denominator);
  NumericRationalFunction(const RationalFunction& exact);

  const ComplexPolyD& numerator() const { return num_; }
  const ComplexPolyD& denominator() const { return den_; }

  // Quotient rule; denominator squared, not reduced.
  NumericRationalFunction derivative() const;

  std::complex<double> operator()(std::complex<double> z) const { return num_(z) / den_(z); }

 private:
  ComplexPolyD num_;
  ComplexPolyD den_;
};

}  // namespace wforge
