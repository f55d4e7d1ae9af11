#include "wforge/poly.hpp"

namespace wforge {

ComplexPolyD to_numeric(const ComplexPoly& p) {
  std::vector<std::complex<double>> c;
  c.reserve(p.coefficients().size());
  for (const auto& x : p.coefficients()) c.push_back(x.to_complex());
  return ComplexPolyD(std::move(c));
}

ComplexPoly poly_gcd(const ComplexPoly& a, const ComplexPoly& b) {
  if (a.is_zero() && b.is_zero())
    throw Error(ErrorKind::DegenerateInput, "gcd of two zero polynomials is undefined");
  ComplexPoly x = a;
  ComplexPoly y = b;
  while (!y.is_zero()) {
    ComplexPoly r = x.divmod(y).second;
    x = std::move(y);
    // Keeping remainders monic stops coefficient growth in the Euclidean loop.
    y = r.monic();
  }
  return x.monic();
}

ComplexPoly exact_divide(const ComplexPoly& a, const ComplexPoly& b) {
  auto [q, r] = a.divmod(b);
  if (!r.is_zero())
    throw Error(ErrorKind::StructureViolation, "polynomial division leaves a nonzero remainder");
  return q;
}

}  // namespace wforge
