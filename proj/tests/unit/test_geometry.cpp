#include <gtest/gtest.h>

#include <cmath>

#include "expect_error.hpp"
#include "oracles.hpp"
#include "wforge/geometry.hpp"

using namespace wforge;
using wforge::testing::rel_diff;

namespace {

PolySurface family_surface(const FamilyDescriptor& d) { return PolySurface(make_family(d).surface()); }

PolySurface control_surface() {
  // (u, v, u^2): H = 1 at the origin.
  SurfacePolynomialD s;
  s.x[0] = BivariatePolyD::u();
  s.x[1] = BivariatePolyD::v();
  s.x[2] = BivariatePolyD::term(1.0, 2, 0);
  s.degree = 2;
  return PolySurface(s);
}

}  // namespace

TEST(Forms, EnneperAtOrigin) {
  const PolySurface s = family_surface(enneper());
  const FormsSample f = forms_at(s, 0.0, 0.0);
  EXPECT_DOUBLE_EQ(f.E, 0.25);
  EXPECT_DOUBLE_EQ(f.G, 0.25);
  EXPECT_DOUBLE_EQ(f.F, 0.0);
  EXPECT_DOUBLE_EQ(f.H, 0.0);
  EXPECT_DOUBLE_EQ(f.K, -16.0);
  EXPECT_DOUBLE_EQ(f.nu, 4.0);
  const FormsSample d = forms_at(s, 0.0, 0.0, DerivativeMode::FiniteDifference);
  EXPECT_NEAR(d.E, 0.25, 1e-9);
  EXPECT_NEAR(d.K, -16.0, 1e-5);
}

TEST(Forms, EnneperMatchesClosedFormEverywhere) {
  // K = -16 / (1 + u^2 + v^2)^4 on Enneper's surface with these data.
  const PolySurface s = family_surface(enneper());
  for (double u : {-1.0, -0.3, 0.0, 0.7}) {
    for (double v : {-0.9, 0.2, 1.0}) {
      const double r2 = 1.0 + u * u + v * v;
      const FormsSample f = forms_at(s, u, v);
      EXPECT_LT(rel_diff(f.K, -16.0 / std::pow(r2, 4)), 1e-12);
      EXPECT_LT(rel_diff(f.E, r2 * r2 / 4.0), 1e-13);
      EXPECT_LT(std::abs(f.H), 1e-12);
    }
  }
}

TEST(Forms, Plane) {
  SurfacePolynomialD p;
  p.x[0] = BivariatePolyD::u();
  p.x[1] = BivariatePolyD::v();
  p.degree = 1;
  const FormsSample f = forms_at(PolySurface(p), 0.3, -0.2);
  EXPECT_EQ(f.L, 0.0);
  EXPECT_EQ(f.M, 0.0);
  EXPECT_EQ(f.N, 0.0);
  EXPECT_EQ(f.H, 0.0);
  EXPECT_EQ(f.K, 0.0);
  EXPECT_EQ(f.nu, 0.0);
  EXPECT_EQ(f.relative_h(), 0.0);
}

TEST(Forms, ControlSurfaceIsNotMinimal) {
  const FormsSample f = forms_at(control_surface(), 0.0, 0.0);
  EXPECT_DOUBLE_EQ(f.H, 1.0);
  EXPECT_DOUBLE_EQ(f.K, 0.0);
  EXPECT_DOUBLE_EQ(f.relative_h(), 0.5);
}

TEST(Forms, SingularPointThrows) {
  // r3[1,1,0]: f = z^2 + 1 vanishes at z = i.
  const PolySurface s = family_surface(r3(1, 1, 0));
  EXPECT_WFORGE_ERROR(forms_at(s, 0.0, 1.0), ErrorKind::SingularPoint);
  EXPECT_NO_THROW(forms_at(s, 0.0, 0.5));
}

TEST(Forms, FiniteDifferenceAgreesWithExact) {
  for (const auto& d : {r11(1, 0), r12(1, 0, 1, 1), r3(2, -1, 1), enneper()}) {
    const PolySurface s = family_surface(d);
    for (double u : {-0.8, 0.1, 0.6}) {
      for (double v : {-0.5, 0.35, 0.9}) {
        const FormsSample a = forms_at(s, u, v);
        const FormsSample b = forms_at(s, u, v, DerivativeMode::FiniteDifference);
        const double first = std::max(a.E, a.G);
        EXPECT_LE(std::abs(a.E - b.E), 1e-6 * first) << to_string(d);
        EXPECT_LE(std::abs(a.F - b.F), 1e-6 * first) << to_string(d);
        EXPECT_LE(std::abs(a.G - b.G), 1e-6 * first) << to_string(d);
        const SurfaceJet j = s.jet(u, v);
        double second = 0.0;
        for (int k = 0; k < 3; ++k)
          second = std::max({second, std::abs(j.xuu[k]), std::abs(j.xuv[k]), std::abs(j.xvv[k])});
        EXPECT_LE(std::abs(a.L - b.L), 1e-6 * second) << to_string(d);
        EXPECT_LE(std::abs(a.M - b.M), 1e-6 * second) << to_string(d);
        EXPECT_LE(std::abs(a.N - b.N), 1e-6 * second) << to_string(d);
      }
    }
  }
}

TEST(Forms, MetricMatchesWeierstrassFormula) {
  for (const auto& d : {r11(1, 2), r12(1, 1, 2, 0), r3(1, 0, 1)}) {
    const FamilyInstance inst = make_family(d);
    const PolySurface s(inst.surface());
    for (std::complex<double> z : {std::complex<double>(0.4, 0.2), {-0.7, 0.5}, {0.1, -0.9}}) {
      const FormsSample f = forms_at(s, z.real(), z.imag());
      const double want = wforge::testing::metric_oracle(inst.numeric, z);
      EXPECT_LT(rel_diff(f.E, want), 1e-12) << to_string(d);
      EXPECT_LT(rel_diff(f.G, want), 1e-12) << to_string(d);
      EXPECT_LT(std::abs(f.F), 1e-12 * want) << to_string(d);
      EXPECT_LT(rel_diff(f.nu, normal_curvature(inst.numeric, z)), 1e-9) << to_string(d);
    }
  }
}

TEST(Scan, FamiliesPassAndControlFails) {
  for (const auto& d : {r11(1, 0), r12(1, 0, 1, 1), r3(1, 1, 0), enneper()}) {
    const ScanReport r = minimality_scan(family_surface(d), Region{}, 41);
    EXPECT_TRUE(r.pass) << to_string(d) << " rel H " << r.max_relative_h << " K " << r.max_k;
    EXPECT_EQ(r.points, 41 * 41);
    EXPECT_LE(r.max_k, 1e-10);
  }
  const ScanReport c = minimality_scan(control_surface(), Region{}, 41);
  EXPECT_FALSE(c.pass);
  EXPECT_GT(c.max_relative_h, 0.1);
}

TEST(Scan, SkipsSingularPoints) {
  const ScanReport r = minimality_scan(family_surface(r3(1, 1, 0)), Region{}, 3);
  EXPECT_EQ(r.skipped, 2);  // (0, -1) and (0, 1)
  EXPECT_TRUE(r.pass);
  EXPECT_WFORGE_ERROR(minimality_scan(family_surface(enneper()), Region{}, 1), ErrorKind::Domain);
}

TEST(CanonicalEnergy, Values) {
  const RationalFunction g(ComplexPoly::z());
  EXPECT_DOUBLE_EQ(canonical_energy(g, 0.0), 0.25);
  EXPECT_DOUBLE_EQ(canonical_energy(g, std::complex<double>(1.0, 0.0)), 1.0);
  const RationalFunction g2(ComplexPoly::z() * ComplexPoly::z());
  EXPECT_WFORGE_ERROR(canonical_energy(g2, 0.0), ErrorKind::CriticalPoint);
}

TEST(CanonicalEnergy, MoebiusAndInversionInvariance) {
  const RationalFunction g = make_family(r12(1, 0, 1, 1)).exact->g();
  const ExactComplex alpha(Rational(1, 3), Rational(-1, 2));
  const std::complex<double> z(0.6, 0.3);
  const double base = canonical_energy(g, z);
  EXPECT_LT(rel_diff(canonical_energy(moebius_transform(g, alpha), z), base), 1e-12);
  EXPECT_LT(rel_diff(canonical_energy(moebius_transform(g, alpha, 1.1), z), base), 1e-12);
  EXPECT_LT(rel_diff(canonical_energy(inversion_transform(g), z), base), 1e-12);
  EXPECT_LT(rel_diff(canonical_energy(inversion_transform(g, -2.0), z), base), 1e-12);
}

TEST(NormalCurvature, Enneper) {
  const NumericPair p = make_family(enneper()).numeric;
  EXPECT_DOUBLE_EQ(normal_curvature(p, 0.0), 4.0);
  EXPECT_DOUBLE_EQ(normal_curvature(p, std::complex<double>(1.0, 0.0)), 1.0);
}
