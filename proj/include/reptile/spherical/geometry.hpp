#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace reptile::spherical {

using Vec3 = Eigen::Vector3d;

/// Great-circle distance between unit vectors.
double distance(const Vec3& p, const Vec3& q);

/// Unit tangent at p pointing along the minor arc towards q.
Vec3 direction(const Vec3& p, const Vec3& q);

/// Tangent u at p turned counter-clockwise (seen from outside) by theta.
Vec3 rotate_tangent(const Vec3& p, const Vec3& u, double theta);

/// Point reached from p after travelling d along tangent u.
Vec3 travel(const Vec3& p, const Vec3& u, double d);

/// Counter-clockwise angle in [0, 2pi) from tangent u to tangent w at p.
double ccw_angle(const Vec3& p, const Vec3& u, const Vec3& w);

/// Signed orientation of x relative to the oriented great circle p -> q:
/// positive when x lies to the left.
inline double side(const Vec3& p, const Vec3& q, const Vec3& x) { return p.cross(q).normalized().dot(x); }

/// True when x lies on the minor arc p -> q, away from both endpoints.
bool on_arc_interior(const Vec3& p, const Vec3& q, const Vec3& x, double eps);

/// Interior crossing point of two minor arcs, if they cross transversally at
/// points interior to both.
bool proper_crossing(const Vec3& p, const Vec3& q, const Vec3& r, const Vec3& s, double eps, Vec3* at = nullptr);

/// Strictly inside a counter-clockwise spherical triangle by margin eps.
bool strictly_inside(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& x, double eps);

/// Area of a counter-clockwise spherical triangle.
double triangle_area(const Vec3& a, const Vec3& b, const Vec3& c);

}  // namespace reptile::spherical
