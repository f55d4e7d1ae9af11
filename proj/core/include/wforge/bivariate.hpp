#pragma once

#include <map>
#include <string>
#include <utility>

#include "wforge/poly.hpp"

namespace wforge {

/// Real polynomial in (u, v), sparse by exponent pair.
///
/// `R` is Rational (exact) or double. No zero coefficient is ever stored.
template <class R>
class BasicBivariate {
 public:
  using Exponent = std::pair<int, int>;  // (degree in u, degree in v)
  using Terms = std::map<Exponent, R>;

  BasicBivariate() = default;

  static BasicBivariate term(R c, int i, int j) {
    BasicBivariate p;
    p.add(i, j, c);
    return p;
  }
  static BasicBivariate constant(R c) { return term(std::move(c), 0, 0); }
  static BasicBivariate u() { return term(R(1), 1, 0); }
  static BasicBivariate v() { return term(R(1), 0, 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  R coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? R(0) : it->second;
  }

  // Total degree; kMinusInfinity for the zero polynomial.
  int degree() const {
    int d = kMinusInfinity;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
    return d;
  }

  void add(int i, int j, const R& c) {
    if (is_zero_coeff(c)) return;
    auto [it, inserted] = terms_.try_emplace({i, j}, c);
    if (!inserted) {
      it->second += c;
      if (is_zero_coeff(it->second)) terms_.erase(it);
    }
  }

  BasicBivariate& operator+=(const BasicBivariate& o) {
    for (const auto& [e, c] : o.terms_) add(e.first, e.second, c);
    return *this;
  }
  BasicBivariate& operator-=(const BasicBivariate& o) {
    for (const auto& [e, c] : o.terms_) add(e.first, e.second, R(-c));
    return *this;
  }
  BasicBivariate& operator*=(const R& s) {
    if (is_zero_coeff(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend BasicBivariate operator+(BasicBivariate a, const BasicBivariate& b) { return a += b; }
  friend BasicBivariate operator-(BasicBivariate a, const BasicBivariate& b) { return a -= b; }
  friend BasicBivariate operator-(BasicBivariate a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
  }
  friend BasicBivariate operator*(BasicBivariate a, const R& s) { return a *= s; }
  friend BasicBivariate operator*(const R& s, BasicBivariate a) { return a *= s; }
  friend BasicBivariate operator*(const BasicBivariate& a, const BasicBivariate& b) {
    BasicBivariate out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_)
        out.add(ea.first + eb.first, ea.second + eb.second, R(ca * cb));
    return out;
  }
  friend bool operator==(const BasicBivariate& a, const BasicBivariate& b) {
    return a.terms_ == b.terms_;
  }

  BasicBivariate partial_u() const {
    BasicBivariate out;
    for (const auto& [e, c] : terms_)
      if (e.first > 0) out.add(e.first - 1, e.second, R(c * R(e.first)));
    return out;
  }
  BasicBivariate partial_v() const {
    BasicBivariate out;
    for (const auto& [e, c] : terms_)
      if (e.second > 0) out.add(e.first, e.second - 1, R(c * R(e.second)));
    return out;
  }
  BasicBivariate laplacian() const {
    return partial_u().partial_u() + partial_v().partial_v();
  }

  // Horner-free evaluation; exact when T is Rational.
  template <class T>
  T evaluate(const T& u, const T& v) const {
    T acc = T(0);
    for (const auto& [e, c] : terms_) {
      T term = T(to_scalar<T>(c));
      for (int k = 0; k < e.first; ++k) term *= u;
      for (int k = 0; k < e.second; ++k) term *= v;
      acc += term;
    }
    return acc;
  }

  double operator()(double u, double v) const { return evaluate<double>(u, v); }

 private:
  template <class T>
  static T to_scalar(const R& c) {
    if constexpr (std::is_same_v<T, R>) {
      return c;
    } else {
      return T(to_numeric(c));
    }
  }

  Terms terms_;
};

using BivariatePoly = BasicBivariate<Rational>;
using BivariatePolyD = BasicBivariate<double>;

BivariatePolyD to_numeric(const BivariatePoly& p);

// Human-readable form such as "u^2 - v^2" or "1/2*u*v"; for messages and
// diagnostics only.
std::string to_string(const BivariatePoly& p);

/// Real and imaginary parts of p(u + i v) as bivariate polynomials.
template <class C>
std::pair<BasicBivariate<RealScalarT<C>>, BasicBivariate<RealScalarT<C>>> substitute_complex(
    const BasicPoly<C>& p) {
  using R = RealScalarT<C>;
  using B = BasicBivariate<R>;
  B re_out;
  B im_out;
  // (u + iv)^m = pm + i qm, advanced by one multiplication per degree.
  B pm = B::constant(R(1));
  B qm;
  const B u = B::u();
  const B v = B::v();
  for (int m = 0; m <= p.degree(); ++m) {
    const C c = p.coeff(m);
    const R cr = real_part(c);
    const R ci = imag_part(c);
    // (cr + i ci)(pm + i qm) = (cr pm - ci qm) + i (cr qm + ci pm)
    re_out += pm * cr - qm * ci;
    im_out += qm * cr + pm * ci;
    B next_p = pm * u - qm * v;
    B next_q = qm * u + pm * v;
    pm = std::move(next_p);
    qm = std::move(next_q);
  }
  return {std::move(re_out), std::move(im_out)};
}

}  // namespace wforge
