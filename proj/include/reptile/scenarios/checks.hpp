#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "reptile/coxeter/diagram.hpp"
#include "reptile/exact/poly.hpp"
#include "reptile/realize/candidates.hpp"
#include "reptile/realize/tiling.hpp"

// Reusable computations behind the scenarios and the acceptance binary.
namespace reptile::scenarios {

using coxeter::CoxeterDiagram;
using coxeter::TriangleType;
using exact::Rational;

// alpha + 2 beta = pi, gamma = pi/2

/// alpha -> pi - 2 beta, gamma -> pi/2.
angles::RelationSet alpha_two_beta_relations();

/// Rich five-vertex diagrams whose alpha-triangles are the realizable ones.
std::vector<CoxeterDiagram> alpha_two_beta_diagrams();

/// Keeps the diagrams all of whose triangle types are valid spherical
/// triangles for every sampled beta in (pi/3, pi/2).
std::vector<CoxeterDiagram> valid_diagrams(const std::vector<CoxeterDiagram>& ds, int samples = 7);

/// The factored determinants of the four remaining Gram matrices, in t = cos beta.
std::vector<exact::Poly> alpha_two_beta_factored_dets();

/// Real roots of p rounded to two decimals, sorted.
std::vector<double> rounded_roots(const exact::Poly& p);

// two indivisible edge-angles

/// Colorings of K5 in which both triangle types (colors 0..3) occur at least
/// four times and every edge lies in a copy of one of them; returns the
/// distinct per-color edge counts.
std::vector<std::array<int, 4>> derive_edge_counts(const std::array<int, 3>& t1, const std::array<int, 3>& t2);

/// Pair-orbit counts of all nontrivial subgroups of S_n.
struct PairOrbitSurvey {
  std::size_t subgroups = 0;  // including the trivial one
  std::size_t worst = 0;      // most orbits on unordered pairs
  std::size_t bound = 0;      // pair_orbit_bound(n)
  std::size_t at_bound = 0;
  std::size_t at_bound_transpositions = 0;  // of those, groups generated by one transposition
};
PairOrbitSurvey survey_pair_orbits(int n = 5);

// realizable triangles

/// Expected (alpha**) and (beta**) lists for one base tile.
struct TileLists {
  std::string name;
  realize::TileSpec tile;
  angles::RelationSet relations;  // fixes alpha, beta, gamma
  std::vector<std::string> alpha_list;
  std::vector<std::string> beta_list;
  std::vector<std::string> excluded;  // triangle types ruled out by hand
};

/// Reads fixtures/realizable_lists.json.
std::vector<TileLists> load_tile_lists(const std::filesystem::path& fixture_dir);

/// Sorted angle triple (fractions of pi) of a triangle type whose labels are constant.
std::array<Rational, 3> angle_triple(const TriangleType& t, const angles::RelationSet& r);
std::array<Rational, 3> angle_triple(const std::string& text, const angles::RelationSet& r);

struct RealizedCandidate {
  realize::Candidate candidate;
  std::string name;  // in terms of alpha, beta, gamma
  realize::SearchResult search;
  bool verified = false;
  std::string message;
  bool realized() const { return search.status == realize::SearchStatus::found && verified; }
};

/// Candidates (tau, phi, psi) with phi_min < phi, each expressible one searched
/// with at most n tiles and checked by verify_tiling.
std::vector<RealizedCandidate> realize_candidates(const realize::TileSpec& tile, const Rational& tau,
                                                  const Rational& phi_min, std::uint64_t node_budget,
                                                  const std::string& tau_name = "tau");

std::string triple_to_string(const std::array<Rational, 3>& a);

// T0 = (alpha, beta, gamma) with beta = pi/3, gamma = pi/2

/// The two diagrams in which T0 is the only (alpha**) triangle and the
/// alpha-edges are a perfect matching of four vertices.
std::vector<CoxeterDiagram> single_alpha_pair_diagrams();

/// Rich diagrams whose (alpha**) and (beta**) triangles are listed. With the
/// generic filter every other triangle must be valid, have area a multiple of
/// the tile's and edges that are combinations of the tile's edges; otherwise
/// the list's hand exclusions are applied.
std::vector<CoxeterDiagram> rich_diagrams(const TileLists& lists, bool generic_filter, double tol = 1e-5,
                                          int coeff_bound = 20);

/// Shape pairs (alpha-edges, beta-edges) of the rich diagrams, over the colors
/// alpha, beta, gamma and pairwise distinct other angles. Keys are canonical
/// forms with colors alpha = 0, beta = 1, rest = 2.
std::map<std::vector<int>, std::pair<std::string, std::string>> alpha_beta_shapes();
/// Same keys from fixtures/diagrams/alpha_beta_subgraphs.json.
std::map<std::vector<int>, std::pair<std::string, std::string>> alpha_beta_shapes_fixture(
    const std::filesystem::path& fixture_dir);

// T0 = (alpha, alpha, beta)

/// The diagram forced when the beta-edges are vertex-disjoint: beta on uv, xy;
/// alpha on ux, uy, vx, vy, uw, vw; 2 alpha on xw, yw.
CoxeterDiagram forced_alpha_alpha_beta_diagram();

/// Rich diagrams for T0 = (pi/3, pi/3, pi/2) whose pi/3- and pi/2-triangles
/// come from the realizable lists; two free labels stand for other angles.
std::vector<CoxeterDiagram> alpha_alpha_beta_diagrams(const TileLists& lists);

}  // namespace reptile::scenarios
