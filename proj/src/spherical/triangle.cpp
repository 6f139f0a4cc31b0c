#include "reptile/spherical/triangle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <set>

namespace reptile::spherical {

namespace {
constexpr double pi = std::numbers::pi;

double clamp_cos(double x) { return std::clamp(x, -1.0, 1.0); }
}  // namespace

const char* reason_name(Reason r) {
  switch (r) {
    case Reason::ok: return "ok";
    case Reason::angle_range: return "angle-range";
    case Reason::angle_sum: return "angle-sum";
    case Reason::triangle_inequality: return "triangle-inequality";
  }
  return "?";
}

Validity is_valid(const std::array<double, 3>& a, double eps) {
  for (double x : a)
    if (!(x > eps && x < pi - eps)) return {false, Reason::angle_range};
  if (!(a[0] + a[1] + a[2] > pi + eps)) return {false, Reason::angle_sum};
  for (int i = 0; i < 3; ++i) {
    double x = a[(i + 1) % 3], y = a[(i + 2) % 3], z = a[i];
    if (!(x + y < pi + z - eps)) return {false, Reason::triangle_inequality};
  }
  return {true, Reason::ok};
}

Validity is_valid(const std::array<AngleForm, 3>& a, const RelationSet& r, const AngleAssignment& at) {
  // sign of f, exact when possible
  auto sign = [&](const AngleForm& f) -> int {
    if (auto c = r.constant(f)) return sgn(*c);
    double v = angles::eval(r.normalize(f), at);
    return v > 1e-12 ? 1 : (v < -1e-12 ? -1 : 0);
  };
  const AngleForm PI = AngleForm::pi_times(1);
  for (const auto& x : a)
    if (sign(x) <= 0 || sign(PI - x) <= 0) return {false, Reason::angle_range};
  if (sign(a[0] + a[1] + a[2] - PI) <= 0) return {false, Reason::angle_sum};
  for (int i = 0; i < 3; ++i)
    if (sign(PI + a[i] - a[(i + 1) % 3] - a[(i + 2) % 3]) <= 0) return {false, Reason::triangle_inequality};
  return {true, Reason::ok};
}

double area(const std::array<double, 3>& a) {
  auto v = is_valid(a);
  if (!v) throw InvalidTriangle(std::string("area: invalid triangle (") + reason_name(v.reason) + ")");
  return a[0] + a[1] + a[2] - pi;
}

std::array<double, 3> edge_lengths(const std::array<double, 3>& a) {
  auto v = is_valid(a);
  if (!v) throw InvalidTriangle(std::string("edge_lengths: invalid triangle (") + reason_name(v.reason) + ")");
  std::array<double, 3> e{};
  for (int i = 0; i < 3; ++i) {
    double A = a[i], B = a[(i + 1) % 3], C = a[(i + 2) % 3];
    e[i] = std::acos(clamp_cos((std::cos(A) + std::cos(B) * std::cos(C)) / (std::sin(B) * std::sin(C))));
  }
  return e;
}

std::array<double, 3> angles_from_edges(const std::array<double, 3>& e) {
  std::array<double, 3> a{};
  for (int i = 0; i < 3; ++i) {
    double x = e[i], y = e[(i + 1) % 3], z = e[(i + 2) % 3];
    a[i] = std::acos(clamp_cos((std::cos(x) - std::cos(y) * std::cos(z)) / (std::sin(y) * std::sin(z))));
  }
  return a;
}

SphTriangle::SphTriangle(const std::array<double, 3>& angles) : angles_(angles), edges_(edge_lengths(angles)) {}

std::vector<std::vector<int>> straight_angle_combinations(const std::vector<double>& angles, int bound, double tol) {
  std::vector<std::vector<int>> out;
  std::vector<int> m(angles.size(), 0);
  std::function<void(std::size_t, double)> rec = [&](std::size_t i, double sum) {
    if (sum > pi + tol) return;
    if (i == angles.size()) {
      if (std::abs(sum - pi) <= tol) out.push_back(m);
      return;
    }
    for (int c = 0; c <= bound; ++c) {
      m[i] = c;
      double s = sum + c * angles[i];
      if (s > pi + tol) break;
      rec(i + 1, s);
    }
    m[i] = 0;
  };
  rec(0, 0.0);
  return out;
}

std::vector<std::vector<int>> straight_angle_combinations(const std::vector<AngleForm>& angles, const RelationSet& r,
                                                          int bound) {
  std::vector<std::vector<int>> out;
  std::vector<int> m(angles.size(), 0);
  const AngleForm PI = AngleForm::pi_times(1);
  std::function<void(std::size_t, const AngleForm&)> rec = [&](std::size_t i, const AngleForm& sum) {
    if (i == angles.size()) {
      if (r.normalize(sum) == PI) out.push_back(m);
      return;
    }
    for (int c = 0; c <= bound; ++c) {
      m[i] = c;
      rec(i + 1, sum + c * angles[i]);
    }
    m[i] = 0;
  };
  rec(0, AngleForm());
  return out;
}

std::vector<Rational> min_angle_solutions(int max_den) {
  std::set<Rational> found;
  const Rational lo = exact::make_rational(1, 6), hi = exact::make_rational(1, 3);
  for (int q = 1; q <= max_den; ++q)
    for (int p = 1; p < q; ++p) {
      Rational a = exact::make_rational(p, q);
      if (!(lo < a && a < hi) || found.count(a)) continue;
      // need m*a = 1 - n/3 - p/2 for some m >= 1
      bool ok = false;
      for (int n = 0; n <= 3 && !ok; ++n)
        for (int h = 0; h <= 2 && !ok; ++h) {
          Rational rest = 1 - exact::make_rational(n, 3) - exact::make_rational(h, 2);
          if (sgn(rest) <= 0) continue;
          Rational m = rest / a;
          if (m.get_den() == 1 && m >= 1) ok = true;
        }
      if (ok) found.insert(a);
    }
  return {found.begin(), found.end()};
}

}  // namespace reptile::spherical
