#include "reptile/spherical/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace reptile::spherical {

double distance(const Vec3& p, const Vec3& q) { return std::atan2(p.cross(q).norm(), p.dot(q)); }

Vec3 direction(const Vec3& p, const Vec3& q) { return (q - p.dot(q) * p).normalized(); }

Vec3 rotate_tangent(const Vec3& p, const Vec3& u, double theta) {
  return std::cos(theta) * u + std::sin(theta) * p.cross(u);
}

Vec3 travel(const Vec3& p, const Vec3& u, double d) { return (std::cos(d) * p + std::sin(d) * u).normalized(); }

double ccw_angle(const Vec3& p, const Vec3& u, const Vec3& w) {
  double a = std::atan2(p.cross(u).dot(w), u.dot(w));
  if (a < 0) a += 2 * std::numbers::pi;
  return a;
}

bool on_arc_interior(const Vec3& p, const Vec3& q, const Vec3& x, double eps) {
  double len = distance(p, q);
  double dp = distance(p, x), dq = distance(x, q);
  return dp > eps && dq > eps && std::abs(dp + dq - len) < eps;
}

bool proper_crossing(const Vec3& p, const Vec3& q, const Vec3& r, const Vec3& s, double eps, Vec3* at) {
  double s1 = side(p, q, r), s2 = side(p, q, s);
  double s3 = side(r, s, p), s4 = side(r, s, q);
  if (!((s1 > eps && s2 < -eps) || (s1 < -eps && s2 > eps))) return false;
  if (!((s3 > eps && s4 < -eps) || (s3 < -eps && s4 > eps))) return false;
  // both great circles separate the other arc's endpoints; make sure the
  // intersection is on the near side (minor arcs, length < pi)
  Vec3 x = p.cross(q).cross(r.cross(s)).normalized();
  if (x.dot(p + q) < 0) x = -x;
  if (x.dot(r + s) < 0) return false;
  if (at) *at = x;
  return true;
}

bool strictly_inside(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& x, double eps) {
  return side(a, b, x) > eps && side(b, c, x) > eps && side(c, a, x) > eps;
}

double triangle_area(const Vec3& a, const Vec3& b, const Vec3& c) {
  // Van Oosterom - Strackee
  double num = a.dot(b.cross(c));
  double den = 1 + a.dot(b) + b.dot(c) + c.dot(a);
  return 2 * std::atan2(num, den);
}

}  // namespace reptile::spherical
