#pragma once

#include <gmpxx.h>

#include <string>

namespace reptile::exact {

// Arbitrary-precision rational, always kept in lowest terms with a positive
// denominator (mpq_class canonicalizes after every arithmetic operation).
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "p", "-p" or "p/q"; throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& r);

inline double to_double(const Rational& r) { return r.get_d(); }

inline int sign(const Rational& r) { return sgn(r); }

}  // namespace reptile::exact
