#pragma once

#include <array>
#include <string_view>

#include "wforge/weierstrass.hpp"

namespace wforge {

/// Harmonic basis of degree <= 5, in the fixed order a..k:
///   a: u^5 - 10u^3v^2 + 5uv^4     b: v^5 - 10u^2v^3 + 5u^4v
///   c: u^4 - 6u^2v^2 + v^4        d: uv(u^2 - v^2)
///   e: u(u^2 - 3v^2)              f: v(v^2 - 3u^2)
///   g: u^2 - v^2    h: uv    i: u    j: v    k: 1
/// Note the d element is uv(u^2-v^2), a quarter of Im (u+iv)^4.
const std::array<BivariatePoly, 11>& degree5_basis();
const std::array<char, 11>& degree5_vector_names();

/// Eleven coefficient 3-vectors of a harmonic surface of degree <= 5.
template <class R>
struct BasicCoeffVectors5 {
  using Vec = std::array<R, 3>;
  std::array<Vec, 11> v{};

  const Vec& operator[](std::size_t k) const { return v[k]; }
  Vec& operator[](std::size_t k) { return v[k]; }

  const Vec& a() const { return v[0]; }
  const Vec& b() const { return v[1]; }
  const Vec& c() const { return v[2]; }
  const Vec& d() const { return v[3]; }
  const Vec& e() const { return v[4]; }
  const Vec& f() const { return v[5]; }
  const Vec& g() const { return v[6]; }
  const Vec& h() const { return v[7]; }
  const Vec& i() const { return v[8]; }
  const Vec& j() const { return v[9]; }
  const Vec& k() const { return v[10]; }
};
using CoeffVectors5 = BasicCoeffVectors5<Rational>;
using CoeffVectors5D = BasicCoeffVectors5<double>;

// Throws NotRepresentable for degree > 5 or a non-harmonic coordinate.
CoeffVectors5 extract_coeffs(const SurfacePolynomial& surface);
// Float path: the input must match its reconstruction within
// `tolerance` times its largest coefficient.
CoeffVectors5D extract_coeffs(const SurfacePolynomialD& surface, double tolerance = 1e-9);

SurfacePolynomial reconstruct(const CoeffVectors5& cv);

inline constexpr std::size_t kSystemEquations = 18;

// Left-hand sides of the minimality system, in the fixed order of
// equation_labels().
template <class R>
std::array<R, kSystemEquations> system_residual(const BasicCoeffVectors5<R>& cv) {
  auto dot = [](const std::array<R, 3>& x, const std::array<R, 3>& y) {
    return R(x[0] * y[0] + x[1] * y[1] + x[2] * y[2]);
  };
  const auto& a = cv.a();
  const auto& b = cv.b();
  const auto& c = cv.c();
  const auto& d = cv.d();
  const auto& e = cv.e();
  const auto& f = cv.f();
  const auto& g = cv.g();
  const auto& h = cv.h();
  const auto& i = cv.i();
  const auto& j = cv.j();
  return {
      R(dot(a, a) - dot(b, b)),
      dot(a, b),
      R(4 * dot(a, c) - dot(b, d)),
      R(dot(a, d) + 4 * dot(b, c)),
      R(16 * dot(c, c) - dot(d, d) + 30 * dot(a, e) + 30 * dot(b, f)),
      R(4 * dot(d, c) + 15 * dot(b, e) - 15 * dot(a, f)),
      R(9 * dot(e, e) - 9 * dot(f, f) + 16 * dot(c, g) - 2 * dot(d, h) + 10 * dot(a, i) -
        10 * dot(b, j)),
      R(9 * dot(e, f) - 4 * dot(c, h) - 2 * dot(d, g) - 5 * dot(b, i) - 5 * dot(a, j)),
      R(4 * dot(g, g) - dot(h, h) + 6 * dot(e, i) + 6 * dot(f, j)),
      R(2 * dot(g, h) - 3 * dot(f, i) + 3 * dot(e, j)),
      R(5 * dot(a, h) + 10 * dot(b, g) - 12 * dot(c, f) + 3 * dot(d, e)),
      R(5 * dot(b, h) - 10 * dot(a, g) - 3 * dot(d, f) - 12 * dot(c, e)),
      R(6 * dot(e, g) + 3 * dot(f, h) + 4 * dot(c, i) - dot(d, j)),
      R(6 * dot(f, g) - 3 * dot(e, h) - dot(d, i) - 4 * dot(c, j)),
      R(dot(h, i) + 2 * dot(g, j)),
      R(2 * dot(g, i) - dot(h, j)),
      R(dot(i, i) - dot(j, j)),
      dot(i, j),
  };
}

const std::array<std::string_view, kSystemEquations>& equation_labels();

}  // namespace wforge
