#pragma once

#include <array>
#include <complex>
#include <functional>
#include <limits>

#include "wforge/weierstrass.hpp"

namespace wforge {

using Vec3 = std::array<double, 3>;

/// First and second derivatives of a parametrization at one point.
struct SurfaceJet {
  Vec3 xu{};
  Vec3 xv{};
  Vec3 xuu{};
  Vec3 xuv{};
  Vec3 xvv{};
};

/// Fundamental forms and curvatures at (u, v).
struct FormsSample {
  double u = 0.0;
  double v = 0.0;
  double E = 0.0;
  double F = 0.0;
  double G = 0.0;
  double L = 0.0;
  double M = 0.0;
  double N = 0.0;
  double H = 0.0;
  double K = 0.0;
  double nu = 0.0;  // sqrt(-K), zero where K >= 0

  // |H| relative to the shape operator norm sqrt(4H^2 - 2K).
  double relative_h() const;
};

// Throws SingularPoint when EG - F^2 <= threshold.
FormsSample forms_from_jet(const SurfaceJet& jet, double u, double v, double threshold);

/// Float polynomial surface with cached derivative polynomials.
class PolySurface {
 public:
  explicit PolySurface(SurfacePolynomialD s);

  const SurfacePolynomialD& polynomial() const { return s_; }
  Vec3 position(double u, double v) const { return s_.evaluate(u, v); }
  SurfaceJet jet(double u, double v) const;
  // Largest first-derivative coefficient; sets the scale of E, F, G.
  double metric_scale() const { return scale_; }
  // EG - F^2 at or below this is treated as a branch point.
  double singular_threshold() const;

 private:
  SurfacePolynomialD s_;
  std::array<BivariatePolyD, 3> xu_, xv_, xuu_, xuv_, xvv_;
  double scale_ = 0.0;
};

enum class DerivativeMode { Exact, FiniteDifference };

// Exact mode differentiates the polynomials; FiniteDifference uses central
// differences of positions with step 1e-5 times the parameter scale.
FormsSample forms_at(const PolySurface& surface, double u, double v,
                     DerivativeMode mode = DerivativeMode::Exact);

// Finite-difference forms for any position map; the independent oracle.
FormsSample forms_finite_difference(const std::function<Vec3(double, double)>& position, double u,
                                    double v, double threshold, double step = 1e-5);

struct Region {
  double u0 = -1.0;
  double u1 = 1.0;
  double v0 = -1.0;
  double v1 = 1.0;
};

struct ScanTolerances {
  double relative_h = 1e-8;
  double max_k = 1e-10;
};

struct ScanReport {
  int points = 0;
  int skipped = 0;  // singular grid points
  double max_abs_h = 0.0;
  double max_relative_h = 0.0;
  double max_k = -std::numeric_limits<double>::infinity();
  ScanTolerances tolerances;
  bool pass = false;
};

// grid x grid samples over the region (grid >= 2).
ScanReport minimality_scan(const PolySurface& surface, const Region& region, int grid,
                           const ScanTolerances& tol = {});

// (1 + |g|^2)^2 / (4 |g'|^2); throws CriticalPoint where g' = 0.
double canonical_energy(const RationalFunction& g, std::complex<double> z);
double canonical_energy(const NumericRationalFunction& g, std::complex<double> z);

// 4|g'| / (|f| (1 + |g|^2)^2), the normal curvature sqrt(-K) of the
// Weierstrass surface at z.
double normal_curvature(const NumericPair& pair, std::complex<double> z);

}  // namespace wforge
