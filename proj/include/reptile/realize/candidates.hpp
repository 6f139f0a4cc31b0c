#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "reptile/realize/tile_spec.hpp"

namespace reptile::realize {

struct EdgeCombo {
  int i = 0, j = 0, k = 0;
  double length = 0;
  std::string to_string() const;
};

struct EdgeMatch {
  double x = 0;
  bool matched = false;
  EdgeCombo match;                   // when matched
  std::optional<EdgeCombo> below;    // otherwise: nearest combination below x
  std::optional<EdgeCombo> above;    // and nearest above
};

/// Searches i*a + j*b + k*c with i + j + k < bound for a value within tol of
/// x; reports the closest combinations on either side when none matches.
EdgeMatch edge_combination(double x, const std::array<double, 3>& edges, int bound = 20, double tol = 1e-5);

struct Candidate {
  int n = 0;                 // tiles needed (area ratio)
  Rational tau;              // fractions of pi
  AngleCombo small, large;   // small <= large
  Rational small_value, large_value;
  EdgeMatch edge;            // edge opposite tau
  bool expressible() const { return edge.matched; }
  /// Sorted angle triple, fractions of pi.
  std::array<Rational, 3> type() const;
  std::string to_string(const std::string& tau_name) const;
};

/// Triangles (tau, phi, psi) with phi_min < phi <= psi < pi whose area is a
/// multiple n >= 2 of the tile area, angles integer combinations of the tile
/// angles; annotated with the edge test for the edge opposite tau. Angles are
/// fractions of pi.
std::vector<Candidate> enumerate_candidates(const TileSpec& tile, const Rational& tau, const Rational& phi_min);

}  // namespace reptile::realize
