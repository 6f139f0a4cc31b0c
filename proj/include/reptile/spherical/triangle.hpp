#pragma once

#include <array>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "reptile/angles/angle_form.hpp"

namespace reptile::spherical {

using angles::AngleAssignment;
using angles::AngleForm;
using angles::RelationSet;
using exact::Rational;

struct InvalidTriangle : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class Reason { ok, angle_range, angle_sum, triangle_inequality };

const char* reason_name(Reason r);

struct Validity {
  bool valid = false;
  Reason reason = Reason::ok;
  explicit operator bool() const { return valid; }
};

/// Angles in (0, pi), sum > pi, and for each pair: x + y < pi + z.
/// Equality counts as invalid; `eps` is the margin for strict comparisons.
Validity is_valid(const std::array<double, 3>& angles, double eps = 1e-12);

/// Exact variant: each comparison is decided exactly when the difference
/// reduces to a constant under R, and numerically at `at` otherwise.
Validity is_valid(const std::array<AngleForm, 3>& angles, const RelationSet& r, const AngleAssignment& at);

/// Spherical excess. Throws InvalidTriangle.
double area(const std::array<double, 3>& angles);

/// Edge opposite each angle, from the law of cosines for angles.
std::array<double, 3> edge_lengths(const std::array<double, 3>& angles);

/// Angles recovered from edges by the law of cosines for sides.
std::array<double, 3> angles_from_edges(const std::array<double, 3>& edges);

class SphTriangle {
 public:
  explicit SphTriangle(const std::array<double, 3>& angles);
  const std::array<double, 3>& angles() const { return angles_; }
  const std::array<double, 3>& edges() const { return edges_; }
  double area() const { return angles_[0] + angles_[1] + angles_[2] - std::numbers::pi; }

 private:
  std::array<double, 3> angles_;
  std::array<double, 3> edges_;
};

struct Lune {
  double phi;
  double area() const { return 2 * phi; }
};

/// All coefficient vectors m in [0, bound]^n with sum m_i * angles_i = pi
/// (within tol), in lexicographic order.
std::vector<std::vector<int>> straight_angle_combinations(const std::vector<double>& angles, int bound,
                                                          double tol = 1e-9);

/// Exact variant: the sum must normalize to pi under R.
std::vector<std::vector<int>> straight_angle_combinations(const std::vector<AngleForm>& angles,
                                                          const RelationSet& r, int bound);

/// Rationals q with pi/6 < q*pi < pi/3, denominator <= max_den, such that
/// m*q*pi + n*pi/3 + p*pi/2 = pi for integers m >= 1, n, p >= 0.
std::vector<Rational> min_angle_solutions(int max_den = 100);

}  // namespace reptile::spherical
