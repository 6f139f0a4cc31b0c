#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "reptile/gram/gram.hpp"

using namespace reptile;
using namespace reptile::gram;
using exact::ExactMatrix;
using exact::Poly;
using exact::QuadExt;
using exact::RingElement;

namespace {

constexpr double pi = std::numbers::pi;

coxeter::CoxeterDiagram fixture(const std::string& name) {
  return coxeter::load_diagram(std::string(REPTILE_FIXTURE_DIR) + "/diagrams/" + name + ".json");
}

const Poly t = Poly::variable();
const Poly s = Poly(1) - Poly(2) * t * t;  // cos(pi - 2 beta)

ExactMatrix poly_matrix(const std::vector<std::vector<Poly>>& rows) {
  std::vector<RingElement> e;
  for (const auto& r : rows)
    for (const auto& x : r) e.emplace_back(x);
  return ExactMatrix(rows.size(), e);
}

// entries given as (a, b) meaning a + b*sqrt(m)
ExactMatrix quad_matrix(long m, const std::vector<std::vector<std::pair<Rational, Rational>>>& rows) {
  std::vector<RingElement> e;
  for (const auto& r : rows)
    for (const auto& [a, b] : r) e.emplace_back(QuadExt(a, b, m));
  return ExactMatrix(rows.size(), e);
}

void check_same(const ExactMatrix& a, const ExactMatrix& b) {
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) {
      INFO("entry " << i << "," << j << ": " << exact::to_string(a(i, j)) << " vs " << exact::to_string(b(i, j)));
      CHECK(a(i, j) == b(i, j));
    }
}

std::multiset<double> rounded_roots(const Poly& p) {
  std::multiset<double> out;
  for (const auto& r : exact::isolate_roots(p, Rational(1, 100000)))
    out.insert(std::round(r.midpoint().get_d() * 100) / 100);
  return out;
}

std::vector<std::vector<Rational>> pts(const std::vector<std::vector<long>>& v) {
  std::vector<std::vector<Rational>> out;
  for (const auto& p : v) {
    out.emplace_back();
    for (long x : p) out.back().emplace_back(x);
  }
  return out;
}

// dihedral angle along the edge opposite vertices i and j, measured directly
// in the plane orthogonal to that edge
double face_pair_angle(const Eigen::MatrixXd& v, int i, int j) {
  std::vector<int> rest;
  for (int k = 0; k < 4; ++k)
    if (k != i && k != j) rest.push_back(k);
  Eigen::Vector3d p = v.col(rest[0]), q = v.col(rest[1]);
  Eigen::Vector3d e = (q - p).normalized();
  Eigen::Vector3d a = v.col(i) - p, b = v.col(j) - p;
  a -= a.dot(e) * e;
  b -= b.dot(e) * e;
  return std::acos(std::clamp(a.dot(b) / (a.norm() * b.norm()), -1.0, 1.0));
}

}  // namespace

TEST_CASE("Gram matrices of the alpha + 2 beta = pi diagrams match the hand-entered ones") {
  const Poly m = -t;
  std::vector<ExactMatrix> want = {
      poly_matrix({{-1, 0, t, s, t}, {0, -1, m, t, s}, {t, m, -1, 0, 0}, {s, t, 0, -1, 0}, {t, s, 0, 0, -1}}),
      poly_matrix({{-1, t, t, s, 0}, {t, -1, m, 0, s}, {t, m, -1, 0, 0}, {s, 0, 0, -1, t}, {0, s, 0, t, -1}}),
      poly_matrix({{-1, 0, t, s, m}, {0, -1, t, t, s}, {t, t, -1, 0, 0}, {s, t, 0, -1, 0}, {m, s, 0, 0, -1}}),
      poly_matrix({{-1, -s, s, t, 0}, {-s, -1, s, t, 0}, {s, s, -1, 0, t}, {t, t, 0, -1, s}, {0, 0, t, s, -1}}),
  };
  const char* names[] = {"case_a_a", "case_a_b", "case_a_c", "case_a_d"};
  for (int i = 0; i < 4; ++i) {
    CAPTURE(names[i]);
    auto g = gram_from_diagram(fixture(names[i]));
    REQUIRE(g.exact);
    CHECK(!g.fallback);
    CHECK(g.exact->ring() == exact::Ring::polynomial);
    check_same(*g.exact, want[i]);
  }
}

TEST_CASE("determinants of the alpha + 2 beta = pi diagrams factor as claimed") {
  Poly two_t_m1 = Poly(2) * t - Poly(1);
  std::vector<Poly> factored = {
      -(t * t * two_t_m1 * (Poly(2) * t * t - t - Poly(2)) *
        (Poly(4) * t * t * t + Poly(4) * t * t - t - Poly(2))),
      -(t * t * two_t_m1 * (Poly(2) * t * t + t - Poly(2)) *
        (Poly(4) * t * t * t + Poly(2) * t * t - Poly(3) * t - Poly(2))),
      -(exact::pow(t, 4) * two_t_m1 * (Poly(2) * t + Poly(1)) * (Poly(4) * t * t - Poly(3))),
      -(Poly(8) * exact::pow(t, 4) * (Poly(2) * t * t - Poly(1)) *
        (Poly(4) * exact::pow(t, 4) - Poly(7) * t * t + Poly(2))),
  };
  std::vector<std::multiset<double>> gamma = {
      {0, 0.5, -0.78, 1.28, 0.63},
      {0, 0.5, -1.28, 0.78, 0.92},
      {0, 0.5, -0.5, 0.87, -0.87},
      {0, 0.71, -0.71, 1.18, -1.18, 0.60, -0.60},
  };
  const char* names[] = {"case_a_a", "case_a_b", "case_a_c", "case_a_d"};
  for (int i = 0; i < 4; ++i) {
    CAPTURE(names[i]);
    auto g = gram_from_diagram(fixture(names[i]));
    auto d = std::get<Poly>(g.exact->det());
    CHECK(d == factored[i]);
    CHECK(rounded_roots(d) == gamma[i]);
    auto rep = parametric_fiedler(g, Rational(0), Rational(1, 2));
    CHECK(rep.roots_in_interval == 0);
    CHECK(rep.excluded);
    CHECK(rep.real_roots.size() == gamma[i].size());
  }
}

TEST_CASE("Gram matrices of the pi/4 and pi/5 diagrams match the hand-entered ones") {
  const Rational h(1, 2), z(0);
  const std::pair<Rational, Rational> m1{-1, 0}, o{0, 0}, p{h, 0}, n{-h, 0}, r2{0, h}, mr2{0, -h};
  std::vector<ExactMatrix> b = {
      quad_matrix(2, {{m1, p, r2, p, o}, {p, m1, o, o, p}, {r2, o, m1, o, n}, {p, o, o, m1, r2}, {o, p, n, r2, m1}}),
      quad_matrix(2, {{m1, n, p, r2, o},
                      {n, m1, p, r2, mr2},
                      {p, p, m1, o, r2},
                      {r2, r2, o, m1, p},
                      {o, mr2, r2, p, m1}}),
      quad_matrix(2, {{m1, o, p, r2, o}, {o, m1, p, n, o}, {p, p, m1, o, r2}, {r2, n, o, m1, p}, {o, o, r2, p, m1}}),
  };
  const Rational q(1, 4);
  const std::pair<Rational, Rational> g{q, q}, mg{-q, -q}, g2{-q, q}, mg2{q, -q};  // (sqrt5 +- 1)/4
  std::vector<ExactMatrix> c = {
      quad_matrix(5, {{m1, g, g, p, o}, {g, m1, mg, o, p}, {g, mg, m1, n, g2}, {p, o, n, m1, g}, {o, p, g2, g, m1}}),
      quad_matrix(5, {{m1, mg, p, g, o}, {mg, m1, p, g, mg2}, {p, p, m1, o, g}, {g, g, o, m1, p}, {o, mg2, g, p, m1}}),
      quad_matrix(5, {{m1, mg, p, g, o}, {mg, m1, p, g, n}, {p, p, m1, o, g}, {g, g, o, m1, p}, {o, n, g, p, m1}}),
  };
  const char* bn[] = {"pi4_i", "pi4_ii", "pi4_iii"};
  const char* cn[] = {"pi5_i", "pi5_ii", "pi5_iii"};
  for (int i = 0; i < 3; ++i) {
    CAPTURE(i);
    auto gb = gram_from_diagram(fixture(bn[i]));
    auto gc = gram_from_diagram(fixture(cn[i]));
    REQUIRE(gb.exact);
    REQUIRE(gc.exact);
    check_same(*gb.exact, b[i]);
    check_same(*gc.exact, c[i]);
  }
}

TEST_CASE("determinants of the pi/4 and pi/5 diagrams") {
  struct Row {
    const char* name;
    QuadExt det;
    double rounded;
  };
  std::vector<Row> rows = {
      {"pi4_i", QuadExt(Rational(1, 16), 0, 2), 0.06},
      {"pi4_ii", QuadExt(Rational(1, 8), 0, 2), 0.13},
      {"pi4_iii", QuadExt(Rational(9, 16), Rational(-1, 4), 2), 0.21},
      {"pi5_i", QuadExt(Rational(3, 32), Rational(1, 32), 5), 0.16},
      {"pi5_ii", QuadExt(Rational(3, 32), Rational(1, 32), 5), 0.16},
      {"pi5_iii", QuadExt(Rational(15, 32), Rational(-5, 32), 5), 0.12},
  };
  for (const auto& row : rows) {
    CAPTURE(row.name);
    auto rep = fiedler_check(gram_from_diagram(fixture(row.name)));
    REQUIRE(rep.det_exact);
    CHECK(std::get<QuadExt>(*rep.det_exact) == row.det);
    CHECK(std::round(rep.det * 100) / 100 == doctest::Approx(row.rounded));
    CHECK(!rep.singular);
    CHECK(!rep.can_be_simplex);
  }
  // B1 and B2 are rational
  CHECK(std::get<QuadExt>(*fiedler_check(gram_from_diagram(fixture("pi4_i"))).det_exact).is_rational());
}

TEST_CASE("ring choice and binary64 fallback") {
  using angles::parse_angle;
  // pi/3 entries only: rational
  coxeter::CoxeterDiagram a(3, {parse_angle("pi/3"), parse_angle("pi/3"), parse_angle("pi/3")});
  CHECK(gram_from_diagram(a).exact->ring() == exact::Ring::rational);
  // pi/4 next to pi/6: two fields
  coxeter::CoxeterDiagram b(3, {parse_angle("pi/4"), parse_angle("pi/6"), parse_angle("pi/2")});
  auto gb = gram_from_diagram(b);
  CHECK(gb.fallback);
  CHECK(!gb.exact);
  REQUIRE(gb.numeric);
  CHECK((*gb.numeric)(0, 1) == doctest::Approx(std::sqrt(0.5)));
  CHECK((*gb.numeric)(0, 2) == doctest::Approx(std::sqrt(3.0) / 2));
  // free alpha: needs an assignment for the numeric matrix
  coxeter::CoxeterDiagram c(3, {parse_angle("alpha"), parse_angle("pi/2"), parse_angle("pi/2")});
  auto gc = gram_from_diagram(c);
  CHECK(gc.fallback);
  CHECK(!gc.numeric);
  auto gc2 = gram_from_diagram(c, angles::AngleAssignment{0.5, {}, {}});
  REQUIRE(gc2.numeric);
  CHECK((*gc2.numeric)(0, 1) == doctest::Approx(std::cos(0.5)));
  // polynomial entries take numeric values once beta is known
  auto g = gram_from_diagram(fixture("case_a_a"), angles::AngleAssignment{{}, 1.2, {}});
  REQUIRE(g.numeric);
  CHECK((*g.numeric)(0, 2) == doctest::Approx(std::cos(1.2)));
  CHECK_THROWS_AS(parametric_fiedler(gram_from_diagram(a), 0, 1), std::invalid_argument);
}

TEST_CASE("regular simplex passes the Fiedler test") {
  for (int d = 2; d <= 6; ++d) {
    CAPTURE(d);
    Eigen::MatrixXd ang = Eigen::MatrixXd::Constant(d + 1, d + 1, std::acos(1.0 / d));
    auto rep = fiedler_check(gram_from_angles(ang));
    CHECK(rep.singular);
    CHECK(rep.rank == d);
    CHECK(rep.negative_semidefinite);
    CHECK(rep.kernel_positive);
    CHECK(rep.can_be_simplex);
    CHECK(rep.verdict == "passes");
    for (int i = 0; i <= d; ++i) CHECK(rep.kernel[i] == doctest::Approx(1 / std::sqrt(d + 1.0)));
  }
  // regular tetrahedron with integer vertices: dihedral angle arccos(1/3)
  EuclideanSimplex tet(pts({{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}}));
  auto a = dihedral_angles(tet);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(a(i, j) == doctest::Approx(i == j ? pi : std::acos(1.0 / 3)));
  CHECK(tet.volume() == Rational(8, 3));
}

TEST_CASE("right-angled path simplex in R^3 has the expected angles") {
  // two pi/4 and one pi/3, as for the cube orthoscheme
  const Rational h2(1, 2);
  EuclideanSimplex h({{0, 0, 0}, {h2, 0, 0}, {h2, h2, 0}, {h2, h2, h2}});
  auto a = dihedral_angles(h);
  std::multiset<long> deg;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) deg.insert(std::lround(a(i, j) * 180 / pi));
  CHECK(deg == std::multiset<long>{90, 90, 90, 60, 45, 45});
  CHECK(h.volume() == Rational(1, 48));
  auto p = h.to_doubles();
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) CHECK(a(i, j) == doctest::Approx(face_pair_angle(p, i, j)));
  CHECK(fiedler_check(gram_from_angles(a)).can_be_simplex);
}

TEST_CASE("property: random rational simplices give Gram matrices that pass") {
  std::mt19937_64 rng(20261019);
  std::uniform_int_distribution<long> num(-12, 12), den(1, 5);
  int done = 0;
  for (int d : {3, 4}) {
    int made = 0;
    while (made < 100) {
      std::vector<std::vector<Rational>> v(d + 1, std::vector<Rational>(d));
      for (auto& p : v)
        for (auto& x : p) x = Rational(num(rng), den(rng));
      EuclideanSimplex sx(v);
      if (sx.degenerate()) continue;
      ++made;
      auto a = dihedral_angles(sx);
      auto rep = fiedler_check(gram_from_angles(a), 1e-9);
      CHECK(rep.can_be_simplex);
      if (d == 3) {
        auto p = sx.to_doubles();
        for (int i = 0; i < 4; ++i)
          for (int j = i + 1; j < 4; ++j) CHECK(a(i, j) == doctest::Approx(face_pair_angle(p, i, j)).epsilon(1e-9));
      }
      ++done;
    }
  }
  CHECK(done == 200);
}

TEST_CASE("triangle angles sum to pi") {
  EuclideanSimplex tri(pts({{0, 0}, {3, 0}, {1, 2}}));
  auto a = dihedral_angles(tri);
  CHECK(a(0, 1) + a(0, 2) + a(1, 2) == doctest::Approx(pi));
}

TEST_CASE("degenerate and malformed simplices") {
  EuclideanSimplex flat(pts({{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {0, 1, 0}}));
  CHECK(flat.degenerate());
  CHECK(flat.volume() == 0);
  CHECK_THROWS_AS(dihedral_angles(flat), DegenerateSimplex);
  CHECK_THROWS_AS(EuclideanSimplex(pts({{0, 0}, {1, 0}})), std::invalid_argument);
  CHECK_THROWS_AS(EuclideanSimplex(pts({{0}})), std::invalid_argument);
  // a non-simplex angle matrix: all right angles
  Eigen::MatrixXd right = Eigen::MatrixXd::Constant(4, 4, pi / 2);
  auto rep = fiedler_check(gram_from_angles(right));
  CHECK(!rep.singular);
  CHECK(!rep.can_be_simplex);
}
