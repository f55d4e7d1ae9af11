#include "wforge/degree5.hpp"

#include <cmath>

namespace wforge {

namespace {

BivariatePoly mono(long c, int i, int j) { return BivariatePoly::term(Rational(c), i, j); }

// Pivot monomial of each basis element: it occurs in no other element, so
// extraction is a triangular solve.
constexpr std::array<std::pair<int, int>, 11> kPivots = {{
    {5, 0}, {0, 5}, {4, 0}, {3, 1}, {3, 0}, {0, 3}, {2, 0}, {1, 1}, {1, 0}, {0, 1}, {0, 0},
}};

}  // namespace

const std::array<BivariatePoly, 11>& degree5_basis() {
  static const std::array<BivariatePoly, 11> basis = {
      mono(1, 5, 0) + mono(-10, 3, 2) + mono(5, 1, 4),
      mono(1, 0, 5) + mono(-10, 2, 3) + mono(5, 4, 1),
      mono(1, 4, 0) + mono(-6, 2, 2) + mono(1, 0, 4),
      mono(1, 3, 1) + mono(-1, 1, 3),
      mono(1, 3, 0) + mono(-3, 1, 2),
      mono(1, 0, 3) + mono(-3, 2, 1),
      mono(1, 2, 0) + mono(-1, 0, 2),
      mono(1, 1, 1),
      mono(1, 1, 0),
      mono(1, 0, 1),
      mono(1, 0, 0),
  };
  return basis;
}

const std::array<char, 11>& degree5_vector_names() {
  static const std::array<char, 11> names = {'a', 'b', 'c', 'd', 'e', 'f',
                                             'g', 'h', 'i', 'j', 'k'};
  return names;
}

CoeffVectors5 extract_coeffs(const SurfacePolynomial& surface) {
  const auto& basis = degree5_basis();
  CoeffVectors5 cv;
  for (int axis = 0; axis < 3; ++axis) {
    const BivariatePoly& x = surface.x[axis];
    if (x.degree() > 5)
      throw Error(ErrorKind::NotRepresentable,
                  "coordinate " + std::to_string(axis + 1) + " has degree above 5");
    if (!x.laplacian().is_zero())
      throw Error(ErrorKind::NotRepresentable,
                  "coordinate " + std::to_string(axis + 1) + " is not harmonic");
    BivariatePoly rest = x;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const auto [pi, pj] = kPivots[k];
      Rational c = rest.coeff(pi, pj) / basis[k].coeff(pi, pj);
      rest -= basis[k] * c;
      cv[k][axis] = std::move(c);
    }
    if (!rest.is_zero())
      throw Error(ErrorKind::NotRepresentable,
                  "coordinate " + std::to_string(axis + 1) + " is outside the harmonic basis");
  }
  return cv;
}

CoeffVectors5D extract_coeffs(const SurfacePolynomialD& surface, double tolerance) {
  static const auto basis = [] {
    std::array<BivariatePolyD, 11> b;
    for (std::size_t k = 0; k < 11; ++k) b[k] = to_numeric(degree5_basis()[k]);
    return b;
  }();
  CoeffVectors5D cv;
  for (int axis = 0; axis < 3; ++axis) {
    const BivariatePolyD& x = surface.x[axis];
    if (x.degree() > 5)
      throw Error(ErrorKind::NotRepresentable,
                  "coordinate " + std::to_string(axis + 1) + " has degree above 5");
    double scale = 0.0;
    for (const auto& [e, c] : x.terms()) scale = std::max(scale, std::abs(c));
    BivariatePolyD rest = x;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const auto [pi, pj] = kPivots[k];
      const double c = rest.coeff(pi, pj);
      rest -= basis[k] * c;
      cv[k][axis] = c;
    }
    double leftover = 0.0;
    for (const auto& [e, c] : rest.terms()) leftover = std::max(leftover, std::abs(c));
    if (leftover > tolerance * std::max(scale, 1.0))
      throw Error(ErrorKind::NotRepresentable,
                  "coordinate " + std::to_string(axis + 1) + " is not harmonic of degree <= 5");
  }
  return cv;
}

SurfacePolynomial reconstruct(const CoeffVectors5& cv) {
  const auto& basis = degree5_basis();
  SurfacePolynomial s;
  for (int axis = 0; axis < 3; ++axis)
    for (std::size_t k = 0; k < basis.size(); ++k) s.x[axis] += basis[k] * cv[k][axis];
  s.degree = std::max({s.x[0].degree(), s.x[1].degree(), s.x[2].degree()});
  return s;
}

const std::array<std::string_view, kSystemEquations>& equation_labels() {
  static const std::array<std::string_view, kSystemEquations> labels = {
      "a^2-b^2",
      "a.b",
      "4a.c-b.d",
      "a.d+4b.c",
      "16c^2-d^2+30a.e+30b.f",
      "4d.c+15b.e-15a.f",
      "9e^2-9f^2+16c.g-2d.h+10a.i-10b.j",
      "9e.f-4c.h-2d.g-5b.i-5a.j",
      "4g^2-h^2+6e.i+6f.j",
      "2g.h-3f.i+3e.j",
      "5a.h+10b.g-12c.f+3d.e",
      "5b.h-10a.g-3d.f-12c.e",
      "6e.g+3f.h+4c.i-d.j",
      "6f.g-3e.h-d.i-4c.j",
      "h.i+2g.j",
      "2g.i-h.j",
      "i^2-j^2",
      "i.j",
  };
  return labels;
}

}  // namespace wforge
