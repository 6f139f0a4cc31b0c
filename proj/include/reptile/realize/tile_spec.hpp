#pragma once

#include <array>
#include <string>

#include "reptile/angles/angle_form.hpp"
#include "reptile/exact/rational.hpp"

namespace reptile::realize {

using exact::Rational;

/// Base tile T0 given by its three angles as exact fractions of pi, sorted
/// ascending and referred to as alpha, beta, gamma.
struct TileSpec {
  std::array<Rational, 3> angles;  // fractions of pi
  int coeff_bound = 20;
  double tol = 1e-5;

  /// Throws std::invalid_argument unless the angles are sorted and form a
  /// valid spherical triangle.
  static TileSpec make(const Rational& alpha, const Rational& beta, const Rational& gamma, int coeff_bound = 20,
                       double tol = 1e-5);
  /// Parses "a/b,c/d,e/f" or angle literals separated by commas ("pi/4,pi/3,pi/2").
  static TileSpec parse(const std::string& text);

  std::array<double, 3> radians() const;
  /// Edges a, b, c opposite alpha, beta, gamma.
  std::array<double, 3> edges() const;
  /// Spherical area as a fraction of pi (exact).
  Rational area() const { return angles[0] + angles[1] + angles[2] - 1; }

  /// Relations alpha -> ..., beta -> ..., gamma -> ... fixing all symbols.
  angles::RelationSet relations() const;
  std::string to_string() const;
};

/// Integer combination i*alpha + j*beta + k*gamma of tile angles.
struct AngleCombo {
  int i = 0, j = 0, k = 0;
  Rational value(const TileSpec& t) const { return i * t.angles[0] + j * t.angles[1] + k * t.angles[2]; }
  angles::AngleForm form() const;
  std::string to_string() const { return form().to_string(); }
  friend bool operator==(const AngleCombo&, const AngleCombo&) = default;
};

}  // namespace reptile::realize
