#include "wforge/rational_function.hpp"

namespace wforge {

RationalFunction::RationalFunction(ComplexPoly numerator, ComplexPoly denominator) {
  if (denominator.is_zero())
    throw Error(ErrorKind::Domain, "rational function with zero denominator");
  if (numerator.is_zero()) {
    den_ = ComplexPoly::constant(ExactComplex(1));
    return;
  }
  const ComplexPoly g = poly_gcd(numerator, denominator);
  num_ = exact_divide(numerator, g);
  den_ = exact_divide(denominator, g);
  const ExactComplex lead = den_.leading();
  num_ *= ExactComplex(1) / lead;
  den_ = den_.monic();
}

RationalFunction::RationalFunction(ComplexPoly numerator)
    : num_(std::move(numerator)), den_(ComplexPoly::constant(ExactComplex(1))) {}

RationalFunction RationalFunction::derivative() const {
  return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalFunction RationalFunction::reciprocal() const {
  if (is_zero()) throw Error(ErrorKind::Domain, "reciprocal of the zero function");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::compose(const ComplexPoly& inner) const {
  return RationalFunction(num_.compose(inner), den_.compose(inner));
}

std::complex<double> RationalFunction::operator()(std::complex<double> z) const {
  return num_(z) / den_(z);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw Error(ErrorKind::Domain, "division by the zero function");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction operator-(const RationalFunction& a) {
  RationalFunction out = a;
  out.num_ = -out.num_;
  return out;
}

NumericRationalFunction::NumericRationalFunction(ComplexPolyD numerator, ComplexPolyD denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw Error(ErrorKind::Domain, "rational function with zero denominator");
}

NumericRationalFunction::NumericRationalFunction(const RationalFunction& exact)
    : num_(to_numeric(exact.numerator())), den_(to_numeric(exact.denominator())) {}

NumericRationalFunction NumericRationalFunction::derivative() const {
  return NumericRationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

}  // namespace wforge
