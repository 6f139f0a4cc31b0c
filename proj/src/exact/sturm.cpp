#include "reptile/exact/sturm.hpp"

#include <functional>
#include <stdexcept>

namespace reptile::exact {

namespace {

Poly require_nonzero(const Poly& p, const char* who) {
  if (p.is_zero()) throw std::invalid_argument(std::string(who) + ": zero polynomial");
  return square_free_part(p);
}

// Removes a root at x from a square-free polynomial.
Poly deflate(Poly q, const Rational& x) {
  if (q.degree() >= 1 && q.sign_at(x) == 0) q = exact_div(q, Poly(std::vector<Rational>{-x, Rational(1)}));
  return q;
}

std::size_t sign_changes(const std::vector<int>& signs) {
  std::size_t changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::size_t variations_at(const std::vector<Poly>& chain, const Rational& x) {
  std::vector<int> s;
  s.reserve(chain.size());
  for (const auto& p : chain) s.push_back(p.sign_at(x));
  return sign_changes(s);
}

std::size_t count_square_free(const Poly& q0, const Rational& lo, const Rational& hi) {
  Poly q = deflate(deflate(q0, lo), hi);
  if (q.degree() <= 0) return 0;
  auto chain = sturm_sequence(q);
  return variations_at(chain, lo) - variations_at(chain, hi);
}

}  // namespace

std::vector<Poly> sturm_sequence(const Poly& p) {
  std::vector<Poly> chain;
  Poly a = square_free_part(p);
  if (a.is_zero()) return chain;
  Poly b = a.derivative();
  chain.push_back(a);
  while (!b.is_zero()) {
    chain.push_back(b);
    Poly r = -divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return chain;
}

std::size_t sturm_count(const Poly& p, const Rational& lo, const Rational& hi) {
  Poly q = require_nonzero(p, "sturm_count");
  if (!(lo < hi)) throw std::invalid_argument("sturm_count: empty interval");
  return count_square_free(q, lo, hi);
}

std::size_t count_real_roots(const Poly& p) {
  Poly q = require_nonzero(p, "count_real_roots");
  auto chain = sturm_sequence(q);
  std::vector<int> neg, pos;
  for (const auto& c : chain) {
    int s = sgn(c.leading());
    pos.push_back(s);
    neg.push_back(c.degree() % 2 == 0 ? s : -s);
  }
  return sign_changes(neg) - sign_changes(pos);
}

Rational root_bound(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("root_bound: zero polynomial");
  Rational m = 0;
  for (int k = 0; k < p.degree(); ++k) {
    Rational r = abs(p.coefficient(k) / p.leading());
    if (r > m) m = r;
  }
  return m + 1;
}

std::vector<RootInterval> isolate_roots(const Poly& p, const Rational& lo, const Rational& hi,
                                        const Rational& precision) {
  Poly q = require_nonzero(p, "isolate_roots");
  if (sgn(precision) <= 0) throw std::invalid_argument("isolate_roots: precision must be positive");
  std::vector<RootInterval> out;
  if (!(lo < hi)) return out;
  std::function<void(const Rational&, const Rational&, std::size_t)> rec =
      [&](const Rational& a, const Rational& b, std::size_t n) {
        if (n == 0) return;
        if (n == 1 && b - a <= precision) {
          out.push_back({a, b});
          return;
        }
        Rational mid = (a + b) / 2;
        std::size_t left = count_square_free(q, a, mid);
        bool hit = q.sign_at(mid) == 0;
        rec(a, mid, left);
        if (hit) out.push_back({mid, mid});
        rec(mid, b, n - left - (hit ? 1 : 0));
      };
  rec(lo, hi, count_square_free(q, lo, hi));
  return out;
}

std::vector<RootInterval> isolate_roots(const Poly& p, const Rational& precision) {
  if (p.is_zero()) throw std::invalid_argument("isolate_roots: zero polynomial");
  Rational b = root_bound(p);
  return isolate_roots(p, -b, b, precision);
}

}  // namespace reptile::exact
