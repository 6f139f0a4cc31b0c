#pragma once

#include <string>
#include <utility>
#include <vector>

#include "reptile/exact/rational.hpp"

namespace reptile::exact {

/// Univariate polynomial over Q in the variable t. Coefficients are stored in
/// ascending degree; the zero polynomial has no coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coefficients);
  Poly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  Poly(long constant) : Poly(Rational(constant)) {}  // NOLINT

  static Poly monomial(const Rational& c, int degree);
  static Poly variable() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(int k) const;
  const Rational& leading() const;

  Rational operator()(const Rational& x) const;
  double eval(double x) const;
  int sign_at(const Rational& x) const { return sgn((*this)(x)); }

  Poly derivative() const;
  Poly monic() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator-(Poly a);
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(char var = 't') const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Euclidean division: returns (q, r) with a = q*b + r and deg r < deg b.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// Exact quotient; throws std::domain_error when b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);

/// Monic greatest common divisor (zero if both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);

/// p / gcd(p, p'), made monic.
Poly square_free_part(const Poly& p);

Poly pow(const Poly& p, unsigned e);

/// Chebyshev polynomial of the first kind: cos(k x) = T_k(cos x).
Poly chebyshev_t(unsigned k);

}  // namespace reptile::exact
