#pragma once

#include <complex>
#include <concepts>
#include <iosfwd>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace wforge {

using Rational = mpq_class;

/// Gaussian rational: a complex number with exact rational real and
/// imaginary parts. Both parts are kept canonical (lowest terms, positive
/// denominator) after every operation.
class ExactComplex {
 public:
  ExactComplex() = default;
  template <std::integral I>
  ExactComplex(I re) : re_(static_cast<long>(re)), im_(0) {}
  template <std::integral I, std::integral J>
  ExactComplex(I re, J im) : re_(static_cast<long>(re)), im_(static_cast<long>(im)) {}
  ExactComplex(Rational re, Rational im = Rational(0));
  ExactComplex(double) = delete;

  static ExactComplex i() { return ExactComplex(0, 1); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  ExactComplex conj() const { return ExactComplex(re_, -im_); }
  // |z|^2, exact.
  Rational norm() const { return Rational(re_ * re_ + im_ * im_); }

  std::complex<double> to_complex() const {
    return {re_.get_d(), im_.get_d()};
  }

  ExactComplex& operator+=(const ExactComplex& o);
  ExactComplex& operator-=(const ExactComplex& o);
  ExactComplex& operator*=(const ExactComplex& o);
  ExactComplex& operator/=(const ExactComplex& o);

  friend ExactComplex operator+(ExactComplex a, const ExactComplex& b) { return a += b; }
  friend ExactComplex operator-(ExactComplex a, const ExactComplex& b) { return a -= b; }
  friend ExactComplex operator*(ExactComplex a, const ExactComplex& b) { return a *= b; }
  friend ExactComplex operator/(ExactComplex a, const ExactComplex& b) { return a /= b; }
  friend ExactComplex operator-(const ExactComplex& a) { return ExactComplex(-a.re_, -a.im_); }

  friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

// "p/q" or "p"; the textual rational form used by every file format.
std::string to_string(const Rational& q);
// "(re,im)".
std::string to_string(const ExactComplex& z);
std::ostream& operator<<(std::ostream& os, const ExactComplex& z);

// Exact principal square root when it exists in Q(i) (Re > 0, or Re = 0
// and Im >= 0).
std::optional<ExactComplex> exact_sqrt(const ExactComplex& z);

// Exact rational equal to a finite double (every double is dyadic).
Rational rational_from_double(double x);

inline bool is_zero_coeff(const ExactComplex& c) { return c.is_zero(); }
inline bool is_zero_coeff(const std::complex<double>& c) {
  return c == std::complex<double>(0.0, 0.0);
}
inline bool is_zero_coeff(const Rational& c) { return sgn(c) == 0; }
inline bool is_zero_coeff(double c) { return c == 0.0; }

inline std::complex<double> to_numeric(const ExactComplex& c) { return c.to_complex(); }
inline std::complex<double> to_numeric(const std::complex<double>& c) { return c; }
inline double to_numeric(const Rational& c) { return c.get_d(); }
inline double to_numeric(double c) { return c; }

// Real/imaginary part with the matching real scalar type.
inline const Rational& real_part(const ExactComplex& c) { return c.re(); }
inline const Rational& imag_part(const ExactComplex& c) { return c.im(); }
inline double real_part(const std::complex<double>& c) { return c.real(); }
inline double imag_part(const std::complex<double>& c) { return c.imag(); }

template <class C>
struct RealScalar;
template <>
struct RealScalar<ExactComplex> {
  using type = Rational;
};
template <>
struct RealScalar<std::complex<double>> {
  using type = double;
};
template <class C>
using RealScalarT = typename RealScalar<C>::type;

}  // namespace wforge
