#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "reptile/spherical/geometry.hpp"
#include "reptile/spherical/triangle.hpp"

using namespace reptile::spherical;
using reptile::angles::parse_angle;
using reptile::angles::Symbol;
using reptile::exact::make_rational;

namespace {
constexpr double pi = std::numbers::pi;

std::array<double, 3> random_valid(std::mt19937& g) {
  std::uniform_real_distribution<double> u(0.05, pi - 0.05);
  while (true) {
    std::array<double, 3> a{u(g), u(g), u(g)};
    if (is_valid(a, 1e-6)) return a;
  }
}
}  // namespace

TEST_CASE("spherical area") {
  CHECK(area({pi / 2, pi / 2, pi / 2}) == doctest::Approx(pi / 2));
  CHECK(area({pi / 3, pi / 3, pi / 2}) == doctest::Approx(pi / 6));
  CHECK(area({2 * pi / 9, pi / 3, pi / 2}) == doctest::Approx(pi / 18));
  CHECK_THROWS_AS(area({0.1, 0.1, 0.1}), InvalidTriangle);
  CHECK(Lune{pi / 4}.area() == doctest::Approx(pi / 2));
}

TEST_CASE("validity") {
  CHECK(is_valid({pi / 2, pi / 2, pi / 2}));
  auto v = is_valid({pi / 2, 4 * pi / 5, 4 * pi / 5});
  CHECK_FALSE(v);
  CHECK(v.reason == Reason::triangle_inequality);
  CHECK(is_valid({0.5, 0.5, 0.5}).reason == Reason::angle_sum);
  CHECK(is_valid({pi, 0.5, 0.5}).reason == Reason::angle_range);

  // (beta, alpha + beta, 2 beta) with alpha + 2 beta = pi fails for every beta
  RelationSet r;
  r.add(Symbol::gamma, "pi/2");
  r.add(Symbol::alpha, "pi - 2*beta");
  for (double t : {0.05, 0.2, 0.35, 0.49}) {
    double beta = std::acos(t);
    AngleAssignment at{pi - 2 * beta, beta, pi / 2};
    auto e = is_valid({parse_angle("beta"), parse_angle("alpha+beta"), parse_angle("2 beta")}, r, at);
    CHECK_FALSE(e);
    CHECK(e.reason == Reason::triangle_inequality);
    CHECK(is_valid({parse_angle("alpha"), parse_angle("beta"), parse_angle("gamma")}, r, at));
  }
}

TEST_CASE("edge lengths of the three base tiles") {
  auto check = [](std::array<double, 3> angles, std::array<double, 3> want) {
    auto e = edge_lengths(angles);
    for (int i = 0; i < 3; ++i) CHECK(std::round(e[i] * 1000) == std::round(want[i] * 1000));
  };
  check({pi / 4, pi / 3, pi / 2}, {0.615, 0.785, 0.955});
  check({pi / 5, pi / 3, pi / 2}, {0.365, 0.554, 0.652});
  check({2 * pi / 9, pi / 3, pi / 2}, {0.485, 0.680, 0.812});
}

TEST_CASE("edge lengths agree with a placed triangle") {
  // independent check: put the vertex with angle A at the pole and measure
  std::mt19937 g(9);
  for (int n = 0; n < 50; ++n) {
    auto a = random_valid(g);
    auto e = edge_lengths(a);
    Vec3 P(0, 0, 1);
    Vec3 Q = travel(P, Vec3(1, 0, 0), e[2]);
    Vec3 R = travel(P, Vec3(std::cos(a[0]), std::sin(a[0]), 0), e[1]);
    CHECK(distance(Q, R) == doctest::Approx(e[0]).epsilon(1e-9));
    CHECK(ccw_angle(Q, direction(Q, R), direction(Q, P)) == doctest::Approx(a[1]).epsilon(1e-9));
    CHECK(triangle_area(P, Q, R) == doctest::Approx(a[0] + a[1] + a[2] - pi).epsilon(1e-9));
  }
}

TEST_CASE("property: random triangles") {
  std::mt19937 g(1);
  for (int n = 0; n < 1000; ++n) {
    auto a = random_valid(g);
    auto e = edge_lengths(a);
    auto back = angles_from_edges(e);
    for (int i = 0; i < 3; ++i) {
      CHECK(std::abs(back[i] - a[i]) < 1e-9);
      CHECK(e[i] > 0);
      CHECK(e[i] < pi);
    }
    CHECK(area(a) < 2 * std::min({a[0], a[1], a[2]}));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (a[i] < a[j]) CHECK(e[i] < e[j]);
    CHECK(e[0] < e[1] + e[2]);
    CHECK(e[1] < e[0] + e[2]);
    CHECK(e[2] < e[0] + e[1]);
  }
}

TEST_CASE("straight angle combinations") {
  CHECK(straight_angle_combinations(std::vector<double>{pi / 2}, 10) == std::vector<std::vector<int>>{{2}});
  CHECK(straight_angle_combinations(std::vector<double>{pi / 3, pi / 2}, 10) ==
        std::vector<std::vector<int>>{{0, 2}, {3, 0}});
  CHECK(min_angle_solutions(100) ==
        std::vector<Rational>{make_rational(1, 5), make_rational(2, 9), make_rational(1, 4)});
}

TEST_CASE("property: exact and numeric straight angle combinations agree") {
  for (auto a : {make_rational(1, 4), make_rational(1, 5), make_rational(2, 9), make_rational(1, 3)}) {
    RelationSet r;
    r.add(Symbol::alpha, reptile::angles::AngleForm::pi_times(a));
    r.add(Symbol::beta, "pi/3");
    r.add(Symbol::gamma, "pi/2");
    std::vector<AngleForm> forms = {AngleForm::alpha(), AngleForm::beta(), AngleForm::gamma()};
    std::vector<double> nums = {a.get_d() * pi, pi / 3, pi / 2};
    CHECK(straight_angle_combinations(forms, r, 6) == straight_angle_combinations(nums, 6));
  }
}
