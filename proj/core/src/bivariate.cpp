#include "wforge/bivariate.hpp"

#include <sstream>

namespace wforge {

BivariatePolyD to_numeric(const BivariatePoly& p) {
  BivariatePolyD out;
  for (const auto& [e, c] : p.terms()) out.add(e.first, e.second, c.get_d());
  return out;
}

std::string to_string(const BivariatePoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest total degree first reads naturally.
  std::vector<std::pair<BivariatePoly::Exponent, Rational>> terms(p.terms().begin(),
                                                                  p.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    const int da = a.first.first + a.first.second;
    const int db = b.first.first + b.first.second;
    if (da != db) return da > db;
    return a.first.first > b.first.first;
  });
  for (const auto& [e, c] : terms) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    const bool bare = e.first == 0 && e.second == 0;
    if (!unit || bare) os << to_string(mag);
    auto var = [&](const char* name, int k, bool need_star) {
      if (k == 0) return need_star;
      if (need_star) os << "*";
      os << name;
      if (k > 1) os << "^" << k;
      return true;
    };
    bool star = !unit;
    star = var("u", e.first, star);
    var("v", e.second, star);
  }
  return os.str();
}

}  // namespace wforge
