#include "reptile/angles/angle_form.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>

namespace reptile::angles {

using exact::Poly;
using exact::QuadExt;

const char* symbol_name(Symbol s) {
  switch (s) {
    case Symbol::pi: return "pi";
    case Symbol::alpha: return "alpha";
    case Symbol::beta: return "beta";
    case Symbol::gamma: return "gamma";
  }
  return "?";
}

AngleForm AngleForm::of(Symbol s, const Rational& coeff) {
  AngleForm f;
  f[s] = coeff;
  return f;
}

bool AngleForm::is_constant() const {
  return sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

bool AngleForm::is_zero() const { return is_constant() && sgn(c_[0]) == 0; }

AngleForm& AngleForm::operator+=(const AngleForm& o) {
  for (int i = 0; i < 4; ++i) c_[i] += o.c_[i];
  return *this;
}

AngleForm& AngleForm::operator-=(const AngleForm& o) {
  for (int i = 0; i < 4; ++i) c_[i] -= o.c_[i];
  return *this;
}

AngleForm& AngleForm::operator*=(const Rational& k) {
  for (auto& c : c_) c *= k;
  return *this;
}

std::string AngleForm::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < 4; ++i) {
    const Rational& c = c_[i];
    if (sgn(c) == 0) continue;
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    Rational a = abs(c);
    if (a != 1) os << a.get_str() << "*";
    os << symbol_name(static_cast<Symbol>(i));
    first = false;
  }
  return first ? "0" : os.str();
}

namespace {

struct Lexer {
  std::string s;
  std::size_t i = 0;

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip();
    return i >= s.size();
  }
  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++i;
      return true;
    }
    return false;
  }
  bool accept(const std::string& word) {
    skip();
    if (s.compare(i, word.size(), word) == 0) {
      i += word.size();
      return true;
    }
    return false;
  }
  std::optional<exact::Integer> number() {
    skip();
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) return std::nullopt;
    exact::Integer v(s.substr(i, j - i));
    i = j;
    return v;
  }
  std::optional<Symbol> symbol() {
    static const std::pair<const char*, Symbol> names[] = {
        {"alpha", Symbol::alpha}, {"beta", Symbol::beta}, {"gamma", Symbol::gamma}, {"pi", Symbol::pi},
        {"\xCE\xB1", Symbol::alpha}, {"\xCE\xB2", Symbol::beta}, {"\xCE\xB3", Symbol::gamma},
        {"\xCF\x80", Symbol::pi}};
    for (const auto& [name, sym] : names)
      if (accept(std::string(name))) return sym;
    return std::nullopt;
  }
};

[[noreturn]] void fail(const std::string& text, const std::string& why) {
  throw std::invalid_argument("parse_angle: " + why + " in '" + text + "'");
}

}  // namespace

AngleForm parse_angle(const std::string& text) {
  Lexer lx{text};
  AngleForm out;
  if (lx.eof()) fail(text, "empty literal");
  bool first = true;
  while (!lx.eof()) {
    int sign = 1;
    if (lx.accept('+')) {
    } else if (lx.accept('-')) {
      sign = -1;
    } else if (!first) {
      fail(text, "expected + or -");
    }
    Rational coeff = 1;
    if (auto n = lx.number()) {
      coeff = Rational(*n);
      if (lx.accept('/')) {
        auto d = lx.number();
        if (!d || *d == 0) fail(text, "bad denominator");
        coeff = Rational(*n, *d);
        coeff.canonicalize();
      }
      lx.accept('*');
    }
    auto sym = lx.symbol();
    if (!sym) fail(text, "expected pi, alpha, beta or gamma");
    if (lx.accept('/')) {
      auto d = lx.number();
      if (!d || *d == 0) fail(text, "bad denominator");
      coeff /= Rational(*d);
    }
    out[*sym] += sign * coeff;
    first = false;
  }
  return out;
}

RelationSet& RelationSet::add(Symbol sym, const AngleForm& rhs) {
  if (sym == Symbol::pi) throw RelationError("RelationSet: pi cannot be eliminated");
  if (eliminates(sym)) throw RelationError(std::string("RelationSet: ") + symbol_name(sym) + " already eliminated");
  AngleForm r = normalize(rhs);
  if (r.depends_on(sym)) throw RelationError(std::string("RelationSet: cyclic rule for ") + symbol_name(sym));
  for (auto& [s, f] : rules_) {
    Rational c = f[sym];
    if (sgn(c) == 0) continue;
    f[sym] = 0;
    f += c * r;
  }
  rules_.emplace(sym, r);
  return *this;
}

AngleForm RelationSet::normalize(const AngleForm& f) const {
  AngleForm out = f;
  for (const auto& [s, rhs] : rules_) {
    Rational c = out[s];
    if (sgn(c) == 0) continue;
    out[s] = 0;
    out += c * rhs;
  }
  return out;
}

std::optional<Rational> RelationSet::constant(const AngleForm& f) const {
  AngleForm n = normalize(f);
  if (!n.is_constant()) return std::nullopt;
  return n[Symbol::pi];
}

std::string RelationSet::to_string() const {
  std::string out;
  for (const auto& [s, rhs] : rules_) {
    if (!out.empty()) out += ", ";
    out += std::string(symbol_name(s)) + " -> " + rhs.to_string();
  }
  return "{" + out + "}";
}

double eval(const AngleForm& f, const AngleAssignment& a) {
  double v = f[Symbol::pi].get_d() * std::numbers::pi;
  auto term = [&](Symbol s, const std::optional<double>& x) {
    if (!f.depends_on(s)) return;
    if (!x) throw MissingSymbol(std::string("eval: no value for ") + symbol_name(s));
    v += f[s].get_d() * *x;
  };
  term(Symbol::alpha, a.alpha);
  term(Symbol::beta, a.beta);
  term(Symbol::gamma, a.gamma);
  return v;
}

AngleAssignment assignment_from(const RelationSet& r) {
  AngleAssignment a;
  auto get = [&](Symbol s) -> std::optional<double> {
    if (auto c = r.constant(AngleForm::of(s))) return c->get_d() * std::numbers::pi;
    return std::nullopt;
  };
  a.alpha = get(Symbol::alpha);
  a.beta = get(Symbol::beta);
  a.gamma = get(Symbol::gamma);
  return a;
}

CosValue exact_cos_pi(const Rational& q0) {
  // reduce to [0, 2) then fold onto [0, 1]
  Rational q = q0;
  exact::Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  exact::Integer two_floor = fl;
  if (fl % 2 != 0) two_floor -= 1;  // floor to even
  q -= Rational(two_floor);
  if (q > 1) q = 2 - q;
  const exact::Integer& den = q.get_den();
  const exact::Integer& num = q.get_num();
  long d = den.fits_slong_p() ? den.get_si() : 0;
  long n = num.get_si();
  auto r = [](long a, long b) { return exact::make_rational(a, b); };
  switch (d) {
    case 1: return Rational(n == 0 ? 1 : -1);
    case 2: return Rational(0);
    case 3: return n == 1 ? r(1, 2) : r(-1, 2);
    case 4: return QuadExt(0, n == 1 ? r(1, 2) : r(-1, 2), 2);
    case 6: return QuadExt(0, n == 1 ? r(1, 2) : r(-1, 2), 3);
    case 5:
      switch (n) {
        case 1: return QuadExt(r(1, 4), r(1, 4), 5);
        case 2: return QuadExt(r(-1, 4), r(1, 4), 5);
        case 3: return QuadExt(r(1, 4), r(-1, 4), 5);
        case 4: return QuadExt(r(-1, 4), r(-1, 4), 5);
      }
      break;
  }
  throw NoExactCosine("exact_cos: no exact cosine for " + q0.get_str() + "*pi");
}

CosValue exact_cos(const AngleForm& f, const RelationSet& r) {
  AngleForm n = r.normalize(f);
  if (n.is_constant()) return exact_cos_pi(n[Symbol::pi]);
  const Rational& p = n[Symbol::pi];
  const Rational& k = n[Symbol::beta];
  if (!n.depends_on(Symbol::alpha) && !n.depends_on(Symbol::gamma) && p.get_den() == 1 && k.get_den() == 1) {
    long kk = k.get_num().get_si();
    Poly c = exact::chebyshev_t(static_cast<unsigned>(kk < 0 ? -kk : kk));
    if (p.get_num() % 2 != 0) c = -c;
    return c;
  }
  throw NoExactCosine("exact_cos: no exact cosine for " + n.to_string());
}

double cos_value_to_double(const CosValue& v, double t) {
  if (const auto* q = std::get_if<Rational>(&v)) return q->get_d();
  if (const auto* x = std::get_if<QuadExt>(&v)) return x->to_double();
  return std::get<Poly>(v).eval(t);
}

std::string to_string(const CosValue& v) {
  if (const auto* q = std::get_if<Rational>(&v)) return q->get_str();
  if (const auto* x = std::get_if<QuadExt>(&v)) return x->to_string();
  return std::get<Poly>(v).to_string();
}

}  // namespace reptile::angles
