#pragma once

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "wforge/weierstrass.hpp"

namespace wforge {

enum class FamilyKind { R11, R12, R3, XuWangDeg5, XuWangOmega, Enneper };

std::string_view to_string(FamilyKind kind);
// Accepts the CLI spellings (r11, r12, r3, xw5, xw, enneper) and the enum
// names; throws InvalidFamily otherwise.
FamilyKind parse_family_kind(std::string_view name);
// Ordered parameter names of a family.
const std::vector<std::string>& family_parameter_names(FamilyKind kind);

using ParamValue = std::variant<ExactComplex, std::complex<double>>;

struct FamilyDescriptor {
  FamilyKind kind = FamilyKind::Enneper;
  std::vector<std::pair<std::string, ParamValue>> params;

  // True when every parameter is a Gaussian rational.
  bool is_exact() const;
  const ParamValue& get(std::string_view name) const;
  ExactComplex exact(std::string_view name) const;
  std::complex<double> numeric(std::string_view name) const;
};

std::string to_string(const ParamValue& v);
// "r12[1,0,1,1]".
std::string to_string(const FamilyDescriptor& d);

/// A constructed family member.
///
/// `exact` is set when the family and its parameters admit an exact pair.
/// `numeric` is always populated except for the planar XuWangOmega limit
/// where it still describes the (degenerate) Weierstrass data.
struct FamilyInstance {
  FamilyDescriptor descriptor;
  std::optional<WeierstrassPair> exact;
  NumericPair numeric;
  std::vector<std::string> notes;

  // Real-part surface: exact pipeline when available, float otherwise;
  // XuWangOmega uses the closed-form P_n/Q_n construction.
  SurfacePolynomialD surface() const;
};

// Throws InvalidFamily on a violated side condition (a = 0, c = 0, ...)
// and NotMinimal for XuWangDeg5 with a2 e1 - a1 e2 >= 0.
FamilyInstance make_family(const FamilyDescriptor& desc);

FamilyDescriptor r11(ExactComplex a, ExactComplex b);
FamilyDescriptor r12(ExactComplex a, ExactComplex b, ExactComplex c, ExactComplex d);
FamilyDescriptor r3(ExactComplex a, ExactComplex b, ExactComplex c);
FamilyDescriptor enneper();

/// Harmonic pair (P_n, Q_n) built from the binomial sums; equals the real
/// and imaginary parts of (u+iv)^n.
std::pair<BivariatePoly, BivariatePoly> xu_wang_basis(int n);

// (-P_n + w P_{n-2}, Q_n + w Q_{n-2}, 2 sqrt(n(n-2)w)/(n-1) P_{n-1}).
SurfacePolynomialD xu_wang_surface(int n, double omega);
// Weierstrass data of the same surface: f = -2n z^{n-1},
// g = -sqrt(n(n-2)w)/(n z).
NumericPair xu_wang_pair(int n, double omega);

struct XuWangDegree5 {
  NumericPair pair;
  std::complex<double> f_coeff;  // f = f_coeff z^2
  std::complex<double> g_coeff;  // g = g_coeff z
  FamilyDescriptor r12;          // case 1.2 with b = d = 0
};
XuWangDegree5 xw_degree5(double a1, double a2, double e1, double e2);

/// f~(z) = alpha f(alpha z + beta), g~(z) = g(alpha z + beta).
std::pair<ComplexPoly, RationalFunction> affine_normalize(const ComplexPoly& f,
                                                          const RationalFunction& g,
                                                          const ExactComplex& alpha,
                                                          const ExactComplex& beta);

/// The map bringing a quadratic polynomial g = A z^2 + B z + C to
/// z^2 + (C - B^2/(4A)): alpha^2 A = 1 on the principal branch,
/// beta = -B/(2A).
struct QuadraticNormalizer {
  std::complex<double> alpha;
  ExactComplex beta;
  std::optional<ExactComplex> alpha_exact;  // when 1/A is a square in Q(i)
  ExactComplex constant;                    // C - B^2/(4A)
};
QuadraticNormalizer quadratic_normalizer(const RationalFunction& g);

// (f g^2, 1/g): the surface mirrored in the plane x1 = 0.
WeierstrassPair symmetry_transform(const WeierstrassPair& pair);

// e^{i phi}(alpha + g)/(1 - conj(alpha) g); exact overload is phi = 0.
RationalFunction moebius_transform(const RationalFunction& g, const ExactComplex& alpha);
NumericRationalFunction moebius_transform(const RationalFunction& g, const ExactComplex& alpha,
                                          double phi);
// e^{i phi}/g.
RationalFunction inversion_transform(const RationalFunction& g);
NumericRationalFunction inversion_transform(const RationalFunction& g, double phi);

struct Coincidence {
  bool coincident = false;
  ExactComplex predicate;                 // b^2 c + d
  std::optional<FamilyDescriptor> r3;     // case-3 normal form of the reduced pair
  std::optional<WeierstrassPair> reduced; // f = a(z+b)^2, g = c(z-b)
};
// r12[a,b,c,d] falls into case 3 exactly when b^2 c + d = 0.
Coincidence coincidence_r12_r3(const ExactComplex& b, const ExactComplex& c,
                               const ExactComplex& d, const ExactComplex& a = ExactComplex(1));

/// Which degree-5 normal case a pair belongs to, with the exact normal form
/// where it can be computed without square roots.
struct Classification {
  std::string label;                       // "1.1", "1.2", "2.1", "2.2", "3", "4" or "other"
  bool mirrored = false;                   // 2.x and 4 are mirrors of 1.x and 3
  std::optional<FamilyDescriptor> normal_form;
  std::optional<FamilyDescriptor> also;    // second family containing the surface
  std::string summary;
};
Classification classify_pair(const WeierstrassPair& pair);

}  // namespace wforge
