#pragma once

#include <stdexcept>
#include <string>

#include "reptile/exact/rational.hpp"

namespace reptile::exact {

struct FieldMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Element a + b*sqrt(m) of the real quadratic field Q(sqrt(m)).
///
/// m is square-free and >= 2. Every binary operation requires both operands to
/// carry the same m; mixing fields throws FieldMismatch.
class QuadExt {
 public:
  QuadExt(Rational a, Rational b, long m);
  static QuadExt rational(Rational a, long m) { return QuadExt(std::move(a), 0, m); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  long field() const { return m_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }
  Rational norm() const { return a_ * a_ - m_ * b_ * b_; }
  QuadExt conjugate() const { return QuadExt(a_, -b_, m_); }
  QuadExt inverse() const;
  int sign() const;

  /// Nearest-double conversion of a and b followed by a + b*sqrt(m) in binary64;
  /// relative error is a few ulp for operands of moderate height.
  double to_double() const;

  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o);

  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
  friend QuadExt operator-(const QuadExt& x) { return QuadExt(-x.a_, -x.b_, x.m_); }
  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    return x.m_ == y.m_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

  std::string to_string() const;

 private:
  void check_field(const QuadExt& o) const;
  Rational a_;
  Rational b_;
  long m_;
};

bool is_square_free(long m);

}  // namespace reptile::exact
