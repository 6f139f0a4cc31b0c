#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "reptile/exact/poly.hpp"
#include "reptile/exact/quadext.hpp"
#include "reptile/exact/rational.hpp"

namespace reptile::angles {

using exact::Rational;

enum class Symbol { pi = 0, alpha = 1, beta = 2, gamma = 3 };

const char* symbol_name(Symbol s);

/// q_pi*pi + q_alpha*alpha + q_beta*beta + q_gamma*gamma with rational q's.
class AngleForm {
 public:
  AngleForm() = default;
  AngleForm(Rational pi, Rational alpha, Rational beta, Rational gamma)
      : c_{std::move(pi), std::move(alpha), std::move(beta), std::move(gamma)} {}

  static AngleForm of(Symbol s, const Rational& coeff = 1);
  static AngleForm pi_times(const Rational& q) { return of(Symbol::pi, q); }
  static AngleForm alpha() { return of(Symbol::alpha); }
  static AngleForm beta() { return of(Symbol::beta); }
  static AngleForm gamma() { return of(Symbol::gamma); }

  const Rational& operator[](Symbol s) const { return c_[static_cast<int>(s)]; }
  Rational& operator[](Symbol s) { return c_[static_cast<int>(s)]; }
  const std::array<Rational, 4>& coefficients() const { return c_; }

  bool depends_on(Symbol s) const { return sgn((*this)[s]) != 0; }
  /// True when only the pi coefficient may be nonzero.
  bool is_constant() const;
  bool is_zero() const;

  AngleForm& operator+=(const AngleForm& o);
  AngleForm& operator-=(const AngleForm& o);
  AngleForm& operator*=(const Rational& k);
  friend AngleForm operator+(AngleForm a, const AngleForm& b) { return a += b; }
  friend AngleForm operator-(AngleForm a, const AngleForm& b) { return a -= b; }
  friend AngleForm operator*(const Rational& k, AngleForm a) { return a *= k; }
  friend AngleForm operator*(long k, AngleForm a) { return a *= Rational(k); }
  friend AngleForm operator-(AngleForm a) { return a *= Rational(-1); }
  friend bool operator==(const AngleForm& a, const AngleForm& b) { return a.c_ == b.c_; }
  friend bool operator<(const AngleForm& a, const AngleForm& b) { return a.c_ < b.c_; }

  /// Literal form, e.g. "alpha + 2*beta", "1/2*pi", "pi - beta", "0".
  std::string to_string() const;

 private:
  std::array<Rational, 4> c_{0, 0, 0, 0};
};

/// Parses the angle literal syntax: a signed sum of terms "[p/q][*| ]sym[/q]"
/// with sym in {pi, alpha, beta, gamma} (Greek letters accepted as well).
/// Throws std::invalid_argument on malformed text.
AngleForm parse_angle(const std::string& text);

struct RelationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Substitution rules, each eliminating one of alpha, beta, gamma. Stored fully
/// reduced: no right-hand side mentions an eliminated symbol, so a single
/// substitution pass yields the canonical form.
class RelationSet {
 public:
  RelationSet() = default;

  /// Adds sym -> rhs. Throws RelationError for pi, for a symbol already
  /// eliminated, or when rhs (after reduction) still contains sym.
  RelationSet& add(Symbol sym, const AngleForm& rhs);
  RelationSet& add(Symbol sym, const std::string& rhs) { return add(sym, parse_angle(rhs)); }

  bool eliminates(Symbol s) const { return rules_.count(s) != 0; }
  const std::map<Symbol, AngleForm>& rules() const { return rules_; }

  AngleForm normalize(const AngleForm& f) const;
  bool equal(const AngleForm& a, const AngleForm& b) const { return normalize(a) == normalize(b); }

  /// Rational multiple of pi when f reduces to a constant.
  std::optional<Rational> constant(const AngleForm& f) const;

  std::string to_string() const;

 private:
  std::map<Symbol, AngleForm> rules_;
};

inline AngleForm normalize(const AngleForm& f, const RelationSet& r) { return r.normalize(f); }

struct AngleAssignment {
  std::optional<double> alpha;
  std::optional<double> beta;
  std::optional<double> gamma;
};

struct MissingSymbol : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

double eval(const AngleForm& f, const AngleAssignment& a);

/// Assignment that satisfies R when every symbol reduces to a constant.
AngleAssignment assignment_from(const RelationSet& r);

struct NoExactCosine : std::domain_error {
  using std::domain_error::domain_error;
};

/// Exact cosine: a rational, an element of Q(sqrt m), or a polynomial in
/// t = cos(beta) when the form reduces to p*pi + k*beta with integers p, k.
using CosValue = std::variant<Rational, exact::QuadExt, exact::Poly>;

CosValue exact_cos(const AngleForm& f, const RelationSet& r);
/// Cosine of q*pi for denominators 1..6 (after reduction to [0, pi]).
CosValue exact_cos_pi(const Rational& q);

double cos_value_to_double(const CosValue& v, double t = 0.0);
std::string to_string(const CosValue& v);

}  // namespace reptile::angles
