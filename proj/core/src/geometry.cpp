#include "wforge/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace wforge {

namespace {

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Vec3 combine(std::initializer_list<std::pair<double, Vec3>> terms) {
  Vec3 out{};
  for (const auto& [w, x] : terms)
    for (int k = 0; k < 3; ++k) out[k] += w * x[k];
  return out;
}

Vec3 eval3(const std::array<BivariatePolyD, 3>& p, double u, double v) {
  return {p[0](u, v), p[1](u, v), p[2](u, v)};
}

}  // namespace

double FormsSample::relative_h() const {
  const double norm2 = 4.0 * H * H - 2.0 * K;
  if (!(norm2 > 0.0)) return H == 0.0 ? 0.0 : 1.0;
  return std::abs(H) / std::sqrt(norm2);
}

FormsSample forms_from_jet(const SurfaceJet& jet, double u, double v, double threshold) {
  FormsSample s;
  s.u = u;
  s.v = v;
  s.E = dot(jet.xu, jet.xu);
  s.F = dot(jet.xu, jet.xv);
  s.G = dot(jet.xv, jet.xv);
  const double w = s.E * s.G - s.F * s.F;
  if (!(w > threshold))
    throw Error(ErrorKind::SingularPoint, "singular point (branch point of the metric) at (u,v)=(" +
                                              std::to_string(u) + "," + std::to_string(v) + ")");
  const Vec3 n = cross(jet.xu, jet.xv);
  const double inv = 1.0 / std::sqrt(w);
  s.L = dot(n, jet.xuu) * inv;
  s.M = dot(n, jet.xuv) * inv;
  s.N = dot(n, jet.xvv) * inv;
  s.K = (s.L * s.N - s.M * s.M) / w;
  s.H = (s.E * s.N - 2.0 * s.F * s.M + s.G * s.L) / (2.0 * w);
  s.nu = s.K < 0.0 ? std::sqrt(-s.K) : 0.0;
  return s;
}

PolySurface::PolySurface(SurfacePolynomialD s) : s_(std::move(s)) {
  for (int k = 0; k < 3; ++k) {
    xu_[k] = s_.x[k].partial_u();
    xv_[k] = s_.x[k].partial_v();
    xuu_[k] = xu_[k].partial_u();
    xuv_[k] = xu_[k].partial_v();
    xvv_[k] = xv_[k].partial_v();
    for (const auto* p : {&xu_[k], &xv_[k]})
      for (const auto& [e, c] : p->terms()) scale_ = std::max(scale_, std::abs(c));
  }
}

SurfaceJet PolySurface::jet(double u, double v) const {
  return {eval3(xu_, u, v), eval3(xv_, u, v), eval3(xuu_, u, v), eval3(xuv_, u, v),
          eval3(xvv_, u, v)};
}

double PolySurface::singular_threshold() const {
  const double s2 = scale_ * scale_;
  return 1e-12 * s2 * s2;
}

FormsSample forms_finite_difference(const std::function<Vec3(double, double)>& position, double u,
                                    double v, double threshold, double step) {
  const double scale = std::max({1.0, std::abs(u), std::abs(v)});
  const double h = step * scale;
  // Second derivatives use a fourth-order stencil on a wider step so that
  // cancellation stays well below the comparison tolerance.
  const double k = 100.0 * h;
  auto x = [&](double du, double dv) { return position(u + du, v + dv); };
  SurfaceJet jet;
  jet.xu = combine({{0.5 / h, x(h, 0)}, {-0.5 / h, x(-h, 0)}});
  jet.xv = combine({{0.5 / h, x(0, h)}, {-0.5 / h, x(0, -h)}});
  const double c2 = 1.0 / (12.0 * k * k);
  const Vec3 x0 = x(0, 0);
  jet.xuu = combine({{-c2, x(2 * k, 0)}, {16 * c2, x(k, 0)}, {-30 * c2, x0}, {16 * c2, x(-k, 0)},
                     {-c2, x(-2 * k, 0)}});
  jet.xvv = combine({{-c2, x(0, 2 * k)}, {16 * c2, x(0, k)}, {-30 * c2, x0}, {16 * c2, x(0, -k)},
                     {-c2, x(0, -2 * k)}});
  // Mixed derivative: fourth-order first-difference stencil in each direction.
  const std::array<std::pair<int, double>, 4> d1 = {{{-2, 1.0}, {-1, -8.0}, {1, 8.0}, {2, -1.0}}};
  Vec3 xuv{};
  for (const auto& [i, wi] : d1)
    for (const auto& [j, wj] : d1) {
      const Vec3 p = x(i * k, j * k);
      for (int m = 0; m < 3; ++m) xuv[m] += wi * wj * p[m];
    }
  const double c11 = 1.0 / (144.0 * k * k);
  for (auto& c : xuv) c *= c11;
  jet.xuv = xuv;
  return forms_from_jet(jet, u, v, threshold);
}

FormsSample forms_at(const PolySurface& surface, double u, double v, DerivativeMode mode) {
  if (mode == DerivativeMode::Exact)
    return forms_from_jet(surface.jet(u, v), u, v, surface.singular_threshold());
  return forms_finite_difference([&](double a, double b) { return surface.position(a, b); }, u, v,
                                 surface.singular_threshold());
}

ScanReport minimality_scan(const PolySurface& surface, const Region& region, int grid,
                           const ScanTolerances& tol) {
  if (grid < 2) throw Error(ErrorKind::Domain, "minimality_scan needs grid >= 2");
  ScanReport rep;
  rep.tolerances = tol;
  for (int j = 0; j < grid; ++j) {
    const double v = region.v0 + (region.v1 - region.v0) * j / (grid - 1);
    for (int i = 0; i < grid; ++i) {
      const double u = region.u0 + (region.u1 - region.u0) * i / (grid - 1);
      ++rep.points;
      FormsSample s;
      try {
        s = forms_at(surface, u, v);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::SingularPoint) throw;
        ++rep.skipped;
        continue;
      }
      rep.max_abs_h = std::max(rep.max_abs_h, std::abs(s.H));
      rep.max_relative_h = std::max(rep.max_relative_h, s.relative_h());
      rep.max_k = std::max(rep.max_k, s.K);
    }
  }
  rep.pass = rep.skipped < rep.points && rep.max_relative_h < tol.relative_h &&
             rep.max_k <= tol.max_k;
  return rep;
}

namespace {

double energy_from(std::complex<double> g, std::complex<double> dg) {
  const double m = std::abs(dg);
  if (!(m > 0.0)) throw Error(ErrorKind::CriticalPoint, "g' vanishes: canonical energy undefined");
  const double s = 1.0 + std::norm(g);
  return s * s / (4.0 * m * m);
}

}  // namespace

double canonical_energy(const RationalFunction& g, std::complex<double> z) {
  return energy_from(g(z), g.derivative()(z));
}

double canonical_energy(const NumericRationalFunction& g, std::complex<double> z) {
  return energy_from(g(z), g.derivative()(z));
}

double normal_curvature(const NumericPair& pair, std::complex<double> z) {
  const NumericRationalFunction g = pair.g();
  const std::complex<double> f = pair.f()(z);
  if (std::abs(f) == 0.0) throw Error(ErrorKind::SingularPoint, "f vanishes: branch point");
  const double s = 1.0 + std::norm(g(z));
  return 4.0 * std::abs(g.derivative()(z)) / (std::abs(f) * s * s);
}

}  // namespace wforge
