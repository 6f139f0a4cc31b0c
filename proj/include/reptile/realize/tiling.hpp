#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "reptile/realize/tile_spec.hpp"
#include "reptile/spherical/geometry.hpp"

namespace reptile::realize {

using spherical::Vec3;

/// A placed tiling: the target polygon (counter-clockwise, a triangle or a
/// lune given as N, E1, S, E2) and tiles as index triples into `vertices`.
struct SphTiling {
  std::vector<Vec3> vertices;
  std::vector<int> target;                // polygon, indices into vertices
  std::vector<std::array<int, 3>> tiles;  // each counter-clockwise
};

/// Target triangle with angles (tau, phi, psi) in radians: vertex A = north
/// pole carries tau, B on the x-axis meridian carries phi, C carries psi.
std::vector<Vec3> place_triangle(double tau, double phi, double psi);
/// Lune of angle phi: N, (1,0,0), S, (cos phi, sin phi, 0).
std::vector<Vec3> place_lune(double phi);

enum class SearchStatus { found, exhausted, aborted };
const char* status_name(SearchStatus s);

struct SearchResult {
  SearchStatus status = SearchStatus::exhausted;
  std::optional<SphTiling> tiling;
  std::uint64_t nodes = 0;
  int tiles_needed = 0;
};

struct SearchOptions {
  int n_max = 0;                    // 0: no cap beyond the area ratio
  double eps = 1e-9;                // vertex snapping / geometric tolerance
  std::uint64_t node_budget = 1000000;
};

/// Exhaustive backtracking: repeatedly fills the boundary corner with the
/// smallest interior angle by every orientation (3 vertices x mirror) of T0
/// aligned with the corner's outgoing edge. Pruned by angle gaps and boundary
/// segment lengths that must be integer combinations of the tile's angles and
/// edges, plus a memo of failed regions.
SearchResult search_tiling(const std::vector<Vec3>& target, const TileSpec& tile, const SearchOptions& opt = {});
SearchResult search_tiling(const std::array<Rational, 3>& target_angles, const TileSpec& tile,
                           const SearchOptions& opt = {});

struct Verification {
  bool ok = false;
  std::string message;
  explicit operator bool() const { return ok; }
};

/// Congruence of every tile to T0 (side lengths, reflections allowed),
/// containment in the (convex) target, pairwise interior disjointness and
/// area conservation. Reports the first violation.
Verification verify_tiling(const SphTiling& t, const TileSpec& tile, double eps = 1e-9);

std::string to_json(const SphTiling& t);
/// Stereographic projection from the south pole; arcs drawn as 64-segment
/// polylines.
std::string to_svg(const SphTiling& t, const std::string& title = "");

}  // namespace reptile::realize
