#include "doctest.h"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "reptile/exact/matrix.hpp"
#include "reptile/exact/poly.hpp"
#include "reptile/exact/quadext.hpp"
#include "reptile/exact/sturm.hpp"

using namespace reptile::exact;

namespace {

Poly P(std::vector<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return Poly(v);
}
const Poly t = Poly::variable();

// 5x5 matrix with -1 on the diagonal and the ten off-diagonal entries given
// in the order uv uw ux uy vw vx vy wx wy xy.
template <class T>
ExactMatrix sym5(const std::vector<T>& pairs, const T& minus_one) {
  std::vector<RingElement> e(25, minus_one);
  int k = 0;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      e[i * 5 + j] = pairs[k];
      e[j * 5 + i] = pairs[k];
      ++k;
    }
  return ExactMatrix(5, e);
}

Rational rnd_rat(std::mt19937& g, int h) {
  std::uniform_int_distribution<int> num(-h, h), den(1, h);
  return make_rational(num(g), den(g));
}

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("6/4") == make_rational(3, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x"));
  CHECK(to_string(make_rational(-2, 6)) == "-1/3");
}

TEST_CASE("polynomial arithmetic") {
  Poly p = (t - Poly(1L)) * (t + Poly(2L));
  CHECK(p == P({-2, 1, 1}));
  CHECK(exact_div(p, t + Poly(2L)) == t - Poly(1L));
  CHECK_THROWS_AS(exact_div(p, t), std::domain_error);
  CHECK(gcd(p, (t - Poly(1L)) * (t - Poly(5L))) == t - Poly(1L));
  CHECK(square_free_part(pow(t, 3) * (t - Poly(1L))) == t * (t - Poly(1L)));
  // T_3(x) = 4x^3 - 3x; cos(3x) identity at x = 0.3
  CHECK(chebyshev_t(3) == P({0, -3, 0, 4}));
  CHECK(chebyshev_t(5).eval(std::cos(0.3)) == doctest::Approx(std::cos(1.5)).epsilon(1e-12));
}

TEST_CASE("det of identity") {
  CHECK(std::get<Rational>(ExactMatrix::identity(5).det()) == 1);
  CHECK(std::get<Rational>(ExactMatrix::identity(0).det()) == 1);
}

TEST_CASE("det needing a row swap") {
  std::vector<RingElement> e = {Rational(0), Rational(1), Rational(1), Rational(0)};
  CHECK(std::get<Rational>(ExactMatrix(2, e).det()) == -1);
}

TEST_CASE("mixed rings are rejected") {
  std::vector<RingElement> e = {Rational(1), Poly(1L), Rational(0), Rational(1)};
  CHECK_THROWS_AS(ExactMatrix(2, e), RingMismatch);
  std::vector<RingElement> f = {QuadExt(1, 0, 2), QuadExt(0, 1, 3), QuadExt(0, 0, 2), QuadExt(1, 0, 2)};
  CHECK_THROWS_AS(ExactMatrix(2, f), RingMismatch);
}

TEST_CASE("polynomial determinant matches a factored form") {
  // cos table with t = cos(beta), alpha + 2 beta = pi
  Poly g = Poly();                       // pi/2
  Poly b = t;                            // beta
  Poly a = Poly(1L) - P({0, 0, 2});      // alpha
  Poly ab = -t;                          // alpha + beta
  ExactMatrix A3 = sym5<Poly>({g, b, a, ab, b, b, a, g, g, g}, Poly(-1L));
  Poly expected = -(pow(t, 4) * P({-1, 2}) * P({1, 2}) * P({-3, 0, 4}));
  CHECK(std::get<Poly>(A3.det()) == expected);
}

TEST_CASE("quadratic-field determinant") {
  QuadExt g(0, 0, 2), b(make_rational(1, 2), 0, 2), a(0, make_rational(1, 2), 2), b2(make_rational(-1, 2), 0, 2);
  ExactMatrix B1 = sym5<QuadExt>({b, a, b, g, g, g, b, g, b2, a}, QuadExt(-1, 0, 2));
  CHECK(std::get<QuadExt>(B1.det()) == QuadExt(make_rational(1, 16), 0, 2));
}

TEST_CASE("property: det is multiplicative") {
  std::mt19937 gen(7);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 1 + trial % 4;
    std::vector<RingElement> qa, qb, pa, pb, xa, xb;
    for (std::size_t i = 0; i < n * n; ++i) {
      qa.push_back(rnd_rat(gen, 9));
      qb.push_back(rnd_rat(gen, 9));
      pa.push_back(Poly(std::vector<Rational>{rnd_rat(gen, 5), rnd_rat(gen, 5)}));
      pb.push_back(Poly(std::vector<Rational>{rnd_rat(gen, 5), rnd_rat(gen, 5), rnd_rat(gen, 5)}));
      xa.push_back(QuadExt(rnd_rat(gen, 6), rnd_rat(gen, 6), 5));
      xb.push_back(QuadExt(rnd_rat(gen, 6), rnd_rat(gen, 6), 5));
    }
    ExactMatrix A(n, qa), B(n, qb);
    CHECK(std::get<Rational>((A * B).det()) == std::get<Rational>(A.det()) * std::get<Rational>(B.det()));
    ExactMatrix C(n, pa), D(n, pb);
    CHECK(std::get<Poly>((C * D).det()) == std::get<Poly>(C.det()) * std::get<Poly>(D.det()));
    ExactMatrix E(n, xa), F(n, xb);
    CHECK(std::get<QuadExt>((E * F).det()) == std::get<QuadExt>(E.det()) * std::get<QuadExt>(F.det()));
  }
}

TEST_CASE("sturm counts") {
  Poly p = P({-1, 2});
  CHECK(sturm_count(p, 0, make_rational(1, 2)) == 0);
  CHECK(sturm_count(p, 0, make_rational(3, 5)) == 1);
  CHECK(count_real_roots(P({1, 0, 1})) == 0);
  CHECK(count_real_roots(pow(t, 2)) == 1);
  CHECK_THROWS(sturm_count(Poly(), 0, 1));
  CHECK_THROWS(sturm_count(p, 1, 0));
}

TEST_CASE("property: sturm count agrees with factored construction") {
  std::mt19937 gen(11);
  std::uniform_int_distribution<int> deg(3, 4), num(-12, 12), den(1, 4);
  for (int trial = 0; trial < 100; ++trial) {
    int d = deg(gen);
    std::vector<Rational> roots;
    Poly p(1L);
    for (int i = 0; i < d; ++i) {
      Rational r = make_rational(num(gen), den(gen));
      roots.push_back(r);
      p *= Poly(std::vector<Rational>{-r, Rational(1)});
    }
    p *= Poly(make_rational(num(gen) == 0 ? 3 : 2, 7));
    Rational lo = make_rational(num(gen), den(gen)), hi = lo + make_rational(1 + trial % 13, 2);
    std::set<Rational> inside;
    for (const auto& r : roots)
      if (lo < r && r < hi) inside.insert(r);
    CHECK(sturm_count(p, lo, hi) == inside.size());
    std::set<Rational> all(roots.begin(), roots.end());
    CHECK(count_real_roots(p) == all.size());
  }
}

TEST_CASE("isolate roots") {
  auto r = isolate_roots(pow(t, 2), make_rational(1, 100));
  REQUIRE(r.size() == 1);
  CHECK(r[0].exact());
  CHECK(r[0].lo == 0);

  // (t^2 - 2)(3t - 1)^2 (t + 5)
  Poly p = P({-2, 0, 1}) * pow(P({-1, 3}), 2) * P({5, 1});
  Rational prec = make_rational(1, 1000);
  auto iv = isolate_roots(p, prec);
  REQUIRE(iv.size() == 4);
  std::vector<double> expect = {-5, -std::sqrt(2.0), 1.0 / 3, std::sqrt(2.0)};
  Poly q = square_free_part(p);
  for (std::size_t i = 0; i < iv.size(); ++i) {
    CHECK(iv[i].hi - iv[i].lo <= prec);
    CHECK(iv[i].midpoint().get_d() == doctest::Approx(expect[i]).epsilon(1e-3));
    if (i + 1 < iv.size()) CHECK(iv[i].hi <= iv[i + 1].lo);
    if (!iv[i].exact()) CHECK(q.sign_at(iv[i].lo) * q.sign_at(iv[i].hi) < 0);
    else CHECK(q.sign_at(iv[i].lo) == 0);
  }
  CHECK_THROWS(isolate_roots(Poly(), prec));
}

TEST_CASE("property: isolating intervals are disjoint with one sign change") {
  std::mt19937 gen(5);
  std::uniform_int_distribution<int> c(-9, 9);
  for (int trial = 0; trial < 60; ++trial) {
    Poly p = P({c(gen), c(gen), c(gen), c(gen), 1 + (trial % 3)});
    p *= P({c(gen), 1});
    auto iv = isolate_roots(p, make_rational(1, 64));
    Poly q = square_free_part(p);
    CHECK(iv.size() == count_real_roots(p));
    for (std::size_t i = 0; i < iv.size(); ++i) {
      if (iv[i].exact()) CHECK(q.sign_at(iv[i].lo) == 0);
      else CHECK(q.sign_at(iv[i].lo) * q.sign_at(iv[i].hi) < 0);
      if (i + 1 < iv.size()) CHECK(iv[i].hi <= iv[i + 1].lo);
    }
  }
}

TEST_CASE("quadratic field arithmetic") {
  QuadExt x(1, 1, 2), y(1, -1, 2);
  CHECK(x * y == QuadExt(-1, 0, 2));
  QuadExt g(make_rational(1, 4), make_rational(1, 4), 5);
  CHECK(g * g == QuadExt(make_rational(3, 8), make_rational(1, 8), 5));
  CHECK(x * x.inverse() == QuadExt(1, 0, 2));
  CHECK_THROWS_AS(x + QuadExt(0, 1, 3), FieldMismatch);
  CHECK_THROWS(QuadExt(0, 0, 2).inverse());
  CHECK_THROWS(QuadExt(1, 1, 4));
  CHECK(QuadExt(3, -2, 2).sign() == 1);   // 3 - 2.83
  CHECK(QuadExt(-3, 2, 3).sign() == 1);   // -3 + 3.46
  CHECK(QuadExt(1, -1, 2).sign() == -1);

  mpf_class five(5, 256), s(0, 256);
  mpf_sqrt(s.get_mpf_t(), five.get_mpf_t());
  mpf_class ref = (s + 1) / 4;
  CHECK(std::abs(g.to_double() - ref.get_d()) < 1e-12);
}

TEST_CASE("property: quadratic arithmetic agrees with binary64") {
  std::mt19937 gen(3);
  const long fields[] = {2, 3, 5, 7};
  for (int trial = 0; trial < 200; ++trial) {
    long m = fields[trial % 4];
    QuadExt x(rnd_rat(gen, 1000), rnd_rat(gen, 1000), m), y(rnd_rat(gen, 1000), rnd_rat(gen, 1000), m);
    double xd = x.to_double(), yd = y.to_double();
    auto close = [](double a, double b) { return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b)); };
    CHECK(close((x + y).to_double(), xd + yd));
    CHECK(close((x * y).to_double(), xd * yd));
    if (!y.is_zero()) CHECK(close((x / y).to_double(), xd / yd));
  }
}
