#include "reptile/exact/rational.hpp"

#include <stdexcept>

namespace reptile::exact {

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s += c;
  if (s.empty()) throw std::invalid_argument("parse_rational: empty input");
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  auto digits_ok = [](const std::string& x, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !x.empty() && (x[0] == '-' || x[0] == '+')) i = 1;
    if (i >= x.size()) return false;
    for (; i < x.size(); ++i)
      if (x[i] < '0' || x[i] > '9') return false;
    return true;
  };
  if (!digits_ok(num, true) || !digits_ok(den, false))
    throw std::invalid_argument("parse_rational: malformed '" + text + "'");
  if (num[0] == '+') num = num.substr(1);
  Integer n(num), d(den);
  if (d == 0) throw std::invalid_argument("parse_rational: zero denominator");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace reptile::exact
