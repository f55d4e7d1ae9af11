#include "wforge/exact_complex.hpp"

#include <cmath>
#include <ostream>

#include "wforge/error.hpp"

namespace wforge {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegenerateInput: return "degenerate-input";
    case ErrorKind::StructureViolation: return "structure-violation";
    case ErrorKind::DegenerateSurface: return "degenerate-surface";
    case ErrorKind::InvalidFamily: return "invalid-family";
    case ErrorKind::NotMinimal: return "not-minimal";
    case ErrorKind::InvalidTransform: return "invalid-transform";
    case ErrorKind::NotRepresentable: return "not-representable";
    case ErrorKind::SingularPoint: return "singular-point";
    case ErrorKind::BranchPointProximity: return "branch-point-proximity";
    case ErrorKind::CriticalPoint: return "critical-point";
    case ErrorKind::EmptyMesh: return "empty-mesh";
    case ErrorKind::Io: return "io";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Parse: return "parse";
  }
  return "unknown";
}

ExactComplex::ExactComplex(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

ExactComplex& ExactComplex::operator+=(const ExactComplex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

ExactComplex& ExactComplex::operator-=(const ExactComplex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

ExactComplex& ExactComplex::operator*=(const ExactComplex& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

ExactComplex& ExactComplex::operator/=(const ExactComplex& o) {
  if (o.is_zero()) throw Error(ErrorKind::Domain, "division by zero Gaussian rational");
  const Rational n = o.norm();
  Rational re = (re_ * o.re_ + im_ * o.im_) / n;
  Rational im = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const ExactComplex& z) {
  return "(" + to_string(z.re()) + "," + to_string(z.im()) + ")";
}

std::ostream& operator<<(std::ostream& os, const ExactComplex& z) { return os << to_string(z); }

namespace {

std::optional<Rational> exact_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
    return std::nullopt;
  mpz_class n = sqrt(q.get_num());
  mpz_class d = sqrt(q.get_den());
  Rational r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace

std::optional<ExactComplex> exact_sqrt(const ExactComplex& z) {
  // sqrt(x+iy) = p+iq with p^2 = (x+m)/2, q^2 = (m-x)/2, m = |z|.
  auto m = exact_sqrt(z.norm());
  if (!m) return std::nullopt;
  auto p = exact_sqrt(Rational((z.re() + *m) / 2));
  auto q = exact_sqrt(Rational((*m - z.re()) / 2));
  if (!p || !q) return std::nullopt;
  Rational im = sgn(z.im()) < 0 ? Rational(-*q) : *q;
  if (sgn(*p) == 0) return ExactComplex(Rational(0), *q);
  return ExactComplex(*p, im);
}

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw Error(ErrorKind::Domain, "non-finite value has no rational form");
  Rational r(x);
  r.canonicalize();
  return r;
}

}  // namespace wforge
