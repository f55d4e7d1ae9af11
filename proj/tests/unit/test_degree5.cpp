#include <gtest/gtest.h>

#include "expect_error.hpp"
#include "oracles.hpp"
#include "wforge/degree5.hpp"

using namespace wforge;

namespace {

using Vec = std::array<Rational, 3>;

Vec vec(Rational a, Rational b, Rational c) { return {a, b, c}; }

SurfacePolynomial surface_of(const FamilyDescriptor& d) {
  return real_part_surface(build_curve(make_family(d).exact.value()));
}

// Independent oracle: solve for the eleven coefficients by exact Gaussian
// elimination on samples at eleven rational points.
CoeffVectors5 solve_by_sampling(const SurfacePolynomial& s) {
  const auto& basis = degree5_basis();
  wforge::testing::Gen gen(99);
  constexpr int n = 11;
  std::array<std::array<Rational, n + 3>, n> m;
  for (int r = 0; r < n; ++r) {
    const Rational u = gen.rational(7, 5);
    const Rational v = gen.rational(7, 5);
    for (int c = 0; c < n; ++c) m[r][c] = basis[c].evaluate(u, v);
    for (int k = 0; k < 3; ++k) m[r][n + k] = s.x[k].evaluate(u, v);
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && sgn(m[piv][col]) == 0) ++piv;
    if (piv == n) throw std::runtime_error("sample points are degenerate");
    std::swap(m[piv], m[col]);
    for (int r = 0; r < n; ++r) {
      if (r == col || sgn(m[r][col]) == 0) continue;
      const Rational f = m[r][col] / m[col][col];
      for (int c = col; c < n + 3; ++c) m[r][c] -= f * m[col][c];
    }
  }
  CoeffVectors5 out;
  for (int r = 0; r < n; ++r)
    for (int k = 0; k < 3; ++k) {
      out[r][k] = m[r][n + k] / m[r][r];
      out[r][k].canonicalize();
    }
  return out;
}

}  // namespace

TEST(Degree5Basis, NamesAndHarmonicity) {
  const auto& names = degree5_vector_names();
  EXPECT_EQ(std::string(names.begin(), names.end()), "abcdefghijk");
  for (const auto& b : degree5_basis()) EXPECT_TRUE(b.laplacian().is_zero());
  const auto& d = degree5_basis()[3];
  EXPECT_EQ(d, BivariatePoly::term(1, 3, 1) - BivariatePoly::term(1, 1, 3));
}

TEST(ExtractCoeffs, Enneper) {
  const CoeffVectors5 cv = extract_coeffs(surface_of(enneper()));
  const Rational z(0);
  for (int k : {0, 1, 2, 3, 7, 10}) EXPECT_EQ(cv[k], vec(z, z, z)) << k;
  EXPECT_EQ(cv.e(), vec(Rational(-1, 6), z, z));
  EXPECT_EQ(cv.f(), vec(z, Rational(1, 6), z));
  EXPECT_EQ(cv.g(), vec(z, z, Rational(1, 2)));
  EXPECT_EQ(cv.i(), vec(Rational(1, 2), z, z));
  EXPECT_EQ(cv.j(), vec(z, Rational(-1, 2), z));
}

TEST(ExtractCoeffs, ZeroSurface) {
  const CoeffVectors5 cv = extract_coeffs(SurfacePolynomial{});
  for (const auto& v : cv.v)
    for (const auto& c : v) EXPECT_EQ(sgn(c), 0);
}

TEST(ExtractCoeffs, AgreesWithSamplingOracle) {
  for (const auto& d : {r12(1, 0, 1, 0), r12(2, 1, -1, 3), r11(1, 0), r3(1, 1, 0), enneper()}) {
    const SurfacePolynomial s = surface_of(d);
    const CoeffVectors5 got = extract_coeffs(s);
    const CoeffVectors5 want = solve_by_sampling(s);
    for (int k = 0; k < 11; ++k) EXPECT_EQ(got[k], want[k]) << to_string(d) << " vector " << k;
    for (const auto& r : system_residual(got)) EXPECT_EQ(sgn(r), 0) << to_string(d);
  }
}

TEST(ExtractCoeffs, RejectsUnrepresentable) {
  SurfacePolynomial s;
  s.x[0] = BivariatePoly::term(1, 2, 0);  // u^2 is not harmonic
  EXPECT_WFORGE_ERROR(extract_coeffs(s), ErrorKind::NotRepresentable);
  SurfacePolynomial t;
  t.x[1] = xu_wang_basis(6).first;
  EXPECT_WFORGE_ERROR(extract_coeffs(t), ErrorKind::NotRepresentable);
  SurfacePolynomialD sd;
  sd.x[0] = BivariatePolyD::term(1.0, 2, 0);
  EXPECT_WFORGE_ERROR(extract_coeffs(sd), ErrorKind::NotRepresentable);
}

TEST(ExtractCoeffs, ReconstructionRoundTrip) {
  const SurfacePolynomial s = surface_of(r12(3, -2, 1, 5));
  const SurfacePolynomial back = reconstruct(extract_coeffs(s));
  for (int k = 0; k < 3; ++k) EXPECT_EQ(back.x[k], s.x[k]);
}

TEST(SystemResidual, EnneperHandValues) {
  const auto r = system_residual(extract_coeffs(surface_of(enneper())));
  for (const auto& x : r) EXPECT_EQ(sgn(x), 0);
  // 4g.g - h.h + 6e.i + 6f.j = 1 - 1/2 - 1/2
  EXPECT_EQ(equation_labels()[8], "4g^2-h^2+6e.i+6f.j");
}

TEST(SystemResidual, ZeroVectorsAndNegativeControl) {
  CoeffVectors5 cv;
  for (const auto& x : system_residual(cv)) EXPECT_EQ(sgn(x), 0);
  cv[0] = vec(1, 0, 0);
  cv[1] = vec(1, 0, 0);
  const auto r = system_residual(cv);
  EXPECT_EQ(r[0], 0);
  EXPECT_EQ(r[1], 1);
}

TEST(SystemResidual, LabelsAreDistinct) {
  const auto& labels = equation_labels();
  EXPECT_EQ(labels.size(), kSystemEquations);
  for (std::size_t a = 0; a < labels.size(); ++a)
    for (std::size_t b = a + 1; b < labels.size(); ++b) EXPECT_NE(labels[a], labels[b]);
  EXPECT_EQ(labels[0], "a^2-b^2");
  EXPECT_EQ(labels[17], "i.j");
}

TEST(SystemResidual, FloatPathMatchesExact) {
  const SurfacePolynomial s = surface_of(r12(1, 2, 3, -1));
  const auto exact = extract_coeffs(s);
  const auto approx = extract_coeffs(to_numeric(s));
  for (int k = 0; k < 11; ++k)
    for (int c = 0; c < 3; ++c) EXPECT_NEAR(approx[k][c], exact[k][c].get_d(), 1e-12);
  for (double r : system_residual(approx)) EXPECT_NEAR(r, 0.0, 1e-9);
}
