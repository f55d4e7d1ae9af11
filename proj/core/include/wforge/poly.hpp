#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "wforge/error.hpp"
#include "wforge/exact_complex.hpp"

namespace wforge {

// Degree reported for the zero polynomial.
inline constexpr int kMinusInfinity = std::numeric_limits<int>::min();

/// Univariate polynomial in z, coefficients stored lowest degree first.
///
/// The coefficient vector is kept trimmed: the last stored coefficient is
/// nonzero, and the zero polynomial has no coefficients at all. `C` is
/// either ExactComplex (exact algebra) or std::complex<double> (float
/// pipeline for irrational parameters).
template <class C>
class BasicPoly {
 public:
  using coeff_type = C;

  BasicPoly() = default;
  explicit BasicPoly(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }
  BasicPoly(std::initializer_list<C> coeffs) : c_(coeffs) { trim(); }

  static BasicPoly constant(C c) { return BasicPoly(std::vector<C>{std::move(c)}); }
  static BasicPoly monomial(C c, int k) {
    std::vector<C> v(static_cast<std::size_t>(k) + 1, C(0L));
    v.back() = std::move(c);
    return BasicPoly(std::move(v));
  }
  static BasicPoly z() { return monomial(C(1L), 1); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return c_.empty() ? kMinusInfinity : static_cast<int>(c_.size()) - 1; }
  const std::vector<C>& coefficients() const { return c_; }

  C coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return C(0L);
    return c_[static_cast<std::size_t>(k)];
  }
  C leading() const { return c_.empty() ? C(0L) : c_.back(); }

  BasicPoly& operator+=(const BasicPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), C(0L));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  BasicPoly& operator-=(const BasicPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), C(0L));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  BasicPoly& operator*=(const C& s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
  }

  friend BasicPoly operator+(BasicPoly a, const BasicPoly& b) { return a += b; }
  friend BasicPoly operator-(BasicPoly a, const BasicPoly& b) { return a -= b; }
  friend BasicPoly operator-(BasicPoly a) {
    for (auto& c : a.c_) c = -c;
    return a;
  }
  friend BasicPoly operator*(BasicPoly a, const C& s) { return a *= s; }
  friend BasicPoly operator*(const C& s, BasicPoly a) { return a *= s; }

  friend BasicPoly operator*(const BasicPoly& a, const BasicPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<C> out(a.c_.size() + b.c_.size() - 1, C(0L));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero_coeff(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return BasicPoly(std::move(out));
  }

  friend bool operator==(const BasicPoly& a, const BasicPoly& b) { return a.c_ == b.c_; }

  BasicPoly pow(int e) const {
    if (e < 0) throw Error(ErrorKind::Domain, "negative polynomial power");
    BasicPoly result = constant(C(1L));
    for (int k = 0; k < e; ++k) result = result * *this;
    return result;
  }

  BasicPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<C> out(c_.size() - 1, C(0L));
    for (std::size_t k = 1; k < c_.size(); ++k) out[k - 1] = c_[k] * C(static_cast<long>(k));
    return BasicPoly(std::move(out));
  }

  // Antiderivative vanishing at z = 0.
  BasicPoly integral() const {
    if (c_.empty()) return {};
    std::vector<C> out(c_.size() + 1, C(0L));
    for (std::size_t k = 0; k < c_.size(); ++k) out[k + 1] = c_[k] / C(static_cast<long>(k + 1));
    return BasicPoly(std::move(out));
  }

  // p(inner(z)) by Horner's rule.
  BasicPoly compose(const BasicPoly& inner) const {
    BasicPoly result;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) result = result * inner + constant(*it);
    return result;
  }

  template <class T>
  T evaluate(const T& z) const {
    T acc = T(0L);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + convert<T>(*it);
    return acc;
  }

  std::complex<double> operator()(std::complex<double> z) const {
    std::complex<double> acc(0.0, 0.0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + to_numeric(*it);
    return acc;
  }

  // Quotient and remainder of Euclidean division; throws on zero divisor.
  std::pair<BasicPoly, BasicPoly> divmod(const BasicPoly& d) const {
    if (d.is_zero()) throw Error(ErrorKind::Domain, "polynomial division by zero");
    BasicPoly rem = *this;
    if (rem.degree() < d.degree()) return {BasicPoly{}, rem};
    std::vector<C> q(static_cast<std::size_t>(rem.degree() - d.degree()) + 1, C(0L));
    const C lead = d.leading();
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
      const int shift = rem.degree() - d.degree();
      const C factor = rem.leading() / lead;
      q[static_cast<std::size_t>(shift)] = factor;
      for (std::size_t k = 0; k < d.c_.size(); ++k)
        rem.c_[k + static_cast<std::size_t>(shift)] -= factor * d.c_[k];
      // Force the cancelled leading term out even in floating point.
      rem.c_.pop_back();
      rem.trim();
    }
    return {BasicPoly(std::move(q)), rem};
  }

  BasicPoly monic() const {
    if (is_zero()) return {};
    BasicPoly out = *this;
    const C lead = leading();
    for (auto& c : out.c_) c /= lead;
    return out;
  }

 private:
  template <class T>
  static T convert(const C& c) {
    if constexpr (std::is_same_v<T, C>) {
      return c;
    } else {
      return T(to_numeric(c));
    }
  }

  void trim() {
    while (!c_.empty() && is_zero_coeff(c_.back())) c_.pop_back();
  }

  std::vector<C> c_;
};

using ComplexPoly = BasicPoly<ExactComplex>;
using ComplexPolyD = BasicPoly<std::complex<double>>;

ComplexPolyD to_numeric(const ComplexPoly& p);

// Monic greatest common divisor. Throws DegenerateInput when both inputs
// are zero.
ComplexPoly poly_gcd(const ComplexPoly& a, const ComplexPoly& b);

// Exact quotient a / b; throws StructureViolation when b does not divide a.
ComplexPoly exact_divide(const ComplexPoly& a, const ComplexPoly& b);

}  // namespace wforge
