#pragma once

#include <string>
#include <string_view>

#include "wforge/rational_function.hpp"

namespace wforge {

// Canonical coefficient-list text, lowest degree first:
//   poly[(1,0), (0,-1/2), (3/4,0)]
// The zero polynomial prints as "poly[]". format_poly(parse_poly(s)) == s
// for every string format_poly produces.
std::string format_poly(const ComplexPoly& p);
ComplexPoly parse_poly(std::string_view text);

// Exact rational from "p", "-p/q" or a finite decimal such as "0.25" or
// "1e-3".
Rational parse_rational(std::string_view text);

/// Parses an expression in z over Q(i) into a reduced rational function.
///
/// Grammar: + - * / ^ (integer exponents), parentheses, implicit
/// multiplication ("2z", "3i"), decimal and integer literals, the constants
/// `i` and `z`, pairs "(re,im)" and poly[...] literals. Examples:
/// "z", "(z+1)^2", "(z^2+1)/z", "poly[(0,0),(0,0),(1,0)]".
RationalFunction parse_expression(std::string_view text);

// Expression that must evaluate to a constant; "(1,2)", "1/3", "2-i".
ExactComplex parse_scalar(std::string_view text);

}  // namespace wforge
