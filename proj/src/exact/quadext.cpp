#include "reptile/exact/quadext.hpp"

#include <cmath>
#include <sstream>

namespace reptile::exact {

bool is_square_free(long m) {
  if (m < 2) return false;
  for (long p = 2; p * p <= m; ++p)
    if (m % (p * p) == 0) return false;
  return true;
}

QuadExt::QuadExt(Rational a, Rational b, long m) : a_(std::move(a)), b_(std::move(b)), m_(m) {
  if (!is_square_free(m)) throw std::invalid_argument("QuadExt: field tag must be square-free and >= 2");
}

void QuadExt::check_field(const QuadExt& o) const {
  if (o.m_ != m_)
    throw FieldMismatch("QuadExt: sqrt(" + std::to_string(m_) + ") vs sqrt(" + std::to_string(o.m_) + ")");
}

QuadExt QuadExt::inverse() const {
  if (is_zero()) throw std::domain_error("QuadExt: division by zero");
  Rational n = norm();  // nonzero since sqrt(m) is irrational
  return QuadExt(a_ / n, -b_ / n, m_);
}

int QuadExt::sign() const {
  int sa = sgn(a_), sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // opposite signs: compare a^2 with m b^2
  int c = cmp(a_ * a_, m_ * b_ * b_);
  return c > 0 ? sa : sb;
}

double QuadExt::to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(static_cast<double>(m_)); }

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  check_field(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  check_field(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  check_field(o);
  Rational a = a_ * o.a_ + m_ * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = a;
  b_ = b;
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
  check_field(o);
  return *this *= o.inverse();
}

std::string QuadExt::to_string() const {
  std::ostringstream os;
  os << a_.get_str();
  if (sgn(b_) != 0) os << (sgn(b_) < 0 ? " - " : " + ") << Rational(abs(b_)).get_str() << "*sqrt(" << m_ << ")";
  return os.str();
}

}  // namespace reptile::exact
