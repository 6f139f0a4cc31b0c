#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "reptile/gram/simplex.hpp"

namespace reptile::hill {

using exact::Rational;
using gram::EuclideanSimplex;

/// Vertices of H^i_d for i in {0, 1, 2}.
EuclideanSimplex hill_simplex(int d, int i);

/// m times every coordinate.
EuclideanSimplex scaled(const EuclideanSimplex& s, const Rational& m);

/// Tile of the lattice tiling by copies of H^1_d: a unit cube center
/// z = n + (1/2, ..., 1/2) and a signed partial permutation of length d-1,
/// entries +-(axis+1).
struct LatticeTile {
  std::vector<long> n;
  std::vector<int> steps;

  int dim() const { return static_cast<int>(n.size()); }
  /// The axis not used by `steps` (0-based).
  int last_axis() const;
  EuclideanSimplex simplex() const;
  std::string to_string() const;
  friend bool operator==(const LatticeTile&, const LatticeTile&) = default;
  friend auto operator<=>(const LatticeTile&, const LatticeTile&) = default;
};

/// Every signed partial permutation of length d-1 (d! * 2^(d-1) of them).
std::vector<std::vector<int>> signed_steps(int d);

/// All lattice tiles in the unit cube with center n + 1/2.
std::vector<LatticeTile> tiles_around(const std::vector<long>& n);

/// Lattice tiles whose vertices all lie in the closed simplex `target`.
std::vector<LatticeTile> tiles_inside(const EuclideanSimplex& target);

/// Exact barycentric coordinates of p with respect to s.
std::vector<Rational> barycentric(const EuclideanSimplex& s, const std::vector<Rational>& p);

/// Some vertex correspondence preserves all squared distances. Mirror images
/// count as congruent.
bool congruent(const EuclideanSimplex& a, const EuclideanSimplex& b);
/// Numeric version on vertex columns.
bool congruent(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, double tol);

/// Union of two simplices sharing a facet when it is itself a simplex.
std::optional<EuclideanSimplex> simplex_union(const EuclideanSimplex& a, const EuclideanSimplex& b);

/// Combinatorial compatibility: same cube, same first d-2 steps and a
/// different axis in step d-1. Then the union is a copy of H^2_d.
bool compatible(const LatticeTile& a, const LatticeTile& b);

struct CompatibilityGraph {
  std::vector<std::vector<int>> adj;
  std::vector<std::vector<int>> components;  // sorted, by smallest member

  /// component size -> number of components
  std::map<std::size_t, std::size_t> profile() const;
  bool all_four_cycles() const;
};

CompatibilityGraph compatibility_graph(const std::vector<LatticeTile>& tiles);

/// Every facet of a tile either lies on the boundary of `target` or is shared
/// with exactly one other tile.
bool facets_match(const std::vector<LatticeTile>& tiles, const EuclideanSimplex& target);

struct TilingReport {
  int d = 0;
  int m = 0;
  std::size_t tiles = 0;
  std::size_t expected_tiles = 0;
  Rational total_volume;
  Rational target_volume;
  bool volume_ok = false;
  bool congruent_ok = false;
  bool facets_ok = false;
  std::map<std::size_t, std::size_t> components;
  std::vector<std::pair<int, int>> pairs;  // filled by the H^2 pairing
  bool pairing_ok = false;

  bool ok() const;
};

struct PairingFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Tiles of m * H^1_d; expects m^d of them.
std::vector<LatticeTile> generate_h1_tiling(int d, int m);
TilingReport check_h1_tiling(int d, int m);

/// The 2 m^d H^1 tiles of m * H^2_d matched into m^d compatible pairs, each
/// verified to form a copy of H^2_d. Throws PairingFailure with the offending
/// component when a component cannot be matched.
TilingReport pair_h2_tiling(int d, int m, std::vector<LatticeTile>* tiles_out = nullptr);

nlohmann::json to_json(const EuclideanSimplex& s);
nlohmann::json to_json(const LatticeTile& t);
nlohmann::json to_json(const TilingReport& r);

}  // namespace reptile::hill
