#include "wforge/text.hpp"

#include <cctype>
#include <cstddef>

namespace wforge {

namespace {

[[noreturn]] void parse_error(std::string_view text, std::size_t pos, const std::string& what) {
  throw Error(ErrorKind::Parse,
              what + " at offset " + std::to_string(pos) + " in \"" + std::string(text) + "\"");
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool consume(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }
  bool consume_word(std::string_view w) {
    skip_ws();
    if (text_.substr(pos_, w.size()) != w) return false;
    pos_ += w.size();
    return true;
  }
  [[noreturn]] void fail(const std::string& what) const { parse_error(text_, pos_, what); }

  // Unsigned decimal literal: digits [. digits] [e[+-]digits].
  std::string_view number() {
    skip_ws();
    const std::size_t start = pos_;
    auto digits = [&] {
      const std::size_t s = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return pos_ > s;
    };
    bool any = digits();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      any = digits() || any;
    }
    if (!any) fail("expected a number");
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t save = pos_++;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      if (!digits()) pos_ = save;
    }
    return text_.substr(start, pos_ - start);
  }

  std::size_t pos() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

Rational parse_decimal(std::string_view s) {
  std::string mantissa;
  long exponent = 0;
  std::size_t k = 0;
  bool seen_dot = false;
  for (; k < s.size() && s[k] != 'e' && s[k] != 'E'; ++k) {
    if (s[k] == '.') {
      seen_dot = true;
      continue;
    }
    mantissa.push_back(s[k]);
    if (seen_dot) --exponent;
  }
  if (k < s.size()) exponent += std::stol(std::string(s.substr(k + 1)));
  if (mantissa.empty()) mantissa = "0";
  Rational r(mpz_class(mantissa, 10));
  mpz_class ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (exponent >= 0)
    r *= ten_pow;
  else
    r /= ten_pow;
  r.canonicalize();
  return r;
}

// Signed rational "[-]p[/q]" as used inside poly[...] literals.
Rational parse_signed_rational(Cursor& cur) {
  bool neg = cur.consume('-');
  Rational r = parse_decimal(cur.number());
  if (cur.consume('/')) {
    Rational d = parse_decimal(cur.number());
    if (sgn(d) == 0) cur.fail("zero denominator");
    r /= d;
  }
  if (neg) r = -r;
  return r;
}

ComplexPoly parse_poly_literal(Cursor& cur) {
  if (!cur.consume_word("poly")) cur.fail("expected 'poly'");
  cur.expect('[');
  std::vector<ExactComplex> coeffs;
  if (!cur.consume(']')) {
    do {
      cur.expect('(');
      Rational re = parse_signed_rational(cur);
      cur.expect(',');
      Rational im = parse_signed_rational(cur);
      cur.expect(')');
      coeffs.emplace_back(std::move(re), std::move(im));
    } while (cur.consume(','));
    cur.expect(']');
  }
  return ComplexPoly(std::move(coeffs));
}

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : cur_(text) {}

  RationalFunction parse() {
    RationalFunction r = expr();
    if (!cur_.at_end()) cur_.fail("unexpected trailing input");
    return r;
  }

 private:
  RationalFunction expr() {
    RationalFunction acc = term();
    for (;;) {
      if (cur_.consume('+'))
        acc = acc + term();
      else if (cur_.consume('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  bool starts_atom() {
    const char c = cur_.peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '(' || c == 'z' ||
           c == 'i' || c == 'p';
  }

  RationalFunction term() {
    RationalFunction acc = unary();
    for (;;) {
      if (cur_.consume('*')) {
        acc = acc * unary();
      } else if (cur_.consume('/')) {
        const std::size_t at = cur_.pos();
        RationalFunction d = unary();
        if (d.is_zero()) parse_error_at(at, "division by zero");
        acc = acc / d;
      } else if (starts_atom()) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  RationalFunction unary() {
    if (cur_.consume('-')) return -unary();
    if (cur_.consume('+')) return unary();
    return power();
  }

  RationalFunction power() {
    RationalFunction base = atom();
    if (!cur_.consume('^')) return base;
    bool neg = cur_.consume('-');
    Rational e = parse_decimal(cur_.number());
    if (e.get_den() != 1 || !e.get_num().fits_slong_p()) cur_.fail("exponent must be an integer");
    long k = e.get_num().get_si();
    RationalFunction out(ComplexPoly::constant(ExactComplex(1)));
    for (long j = 0; j < k; ++j) out = out * base;
    if (neg) {
      if (out.is_zero()) cur_.fail("zero to a negative power");
      out = out.reciprocal();
    }
    return out;
  }

  RationalFunction atom() {
    const char c = cur_.peek();
    if (c == '(') {
      cur_.consume('(');
      RationalFunction first = expr();
      if (cur_.consume(',')) {
        RationalFunction second = expr();
        cur_.expect(')');
        return RationalFunction(ComplexPoly::constant(pair_value(first, second)));
      }
      cur_.expect(')');
      return first;
    }
    if (c == 'p') return RationalFunction(parse_poly_literal(cur_));
    if (cur_.consume('z')) return RationalFunction(ComplexPoly::z());
    if (cur_.consume('i')) return RationalFunction(ComplexPoly::constant(ExactComplex::i()));
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
      return RationalFunction(ComplexPoly::constant(ExactComplex(parse_decimal(cur_.number()))));
    cur_.fail("unexpected character");
  }

  ExactComplex pair_value(const RationalFunction& re, const RationalFunction& im) {
    auto real_const = [&](const RationalFunction& f) {
      if (!f.is_constant()) cur_.fail("pair component must be constant");
      ExactComplex v = f.numerator().coeff(0);
      if (!v.is_real()) cur_.fail("pair component must be real");
      return v.re();
    };
    return ExactComplex(real_const(re), real_const(im));
  }

  [[noreturn]] void parse_error_at(std::size_t, const std::string& what) { cur_.fail(what); }

  Cursor cur_;
};

}  // namespace

std::string format_poly(const ComplexPoly& p) {
  std::string out = "poly[";
  bool first = true;
  for (const auto& c : p.coefficients()) {
    if (!first) out += ", ";
    first = false;
    out += to_string(c);
  }
  out += "]";
  return out;
}

ComplexPoly parse_poly(std::string_view text) {
  Cursor cur(text);
  ComplexPoly p = parse_poly_literal(cur);
  if (!cur.at_end()) cur.fail("unexpected trailing input");
  return p;
}

Rational parse_rational(std::string_view text) {
  Cursor cur(text);
  Rational r = parse_signed_rational(cur);
  if (!cur.at_end()) cur.fail("unexpected trailing input");
  return r;
}

RationalFunction parse_expression(std::string_view text) { return ExpressionParser(text).parse(); }

ExactComplex parse_scalar(std::string_view text) {
  RationalFunction f = parse_expression(text);
  if (!f.is_constant())
    throw Error(ErrorKind::Parse, "expected a constant, got an expression in z: \"" +
                                      std::string(text) + "\"");
  return f.numerator().coeff(0);
}

}  // namespace wforge
