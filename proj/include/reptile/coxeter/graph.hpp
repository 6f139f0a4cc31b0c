#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace reptile::coxeter {

// Edges of K_n are indexed so that (i, j) with i < j maps to j(j-1)/2 + i.
// The index does not depend on n, and every triangle's edges precede the
// first edge touching a larger vertex.
inline int edge_count(int n) { return n * (n - 1) / 2; }
inline int edge_index(int i, int j) {
  if (i > j) std::swap(i, j);
  return j * (j - 1) / 2 + i;
}
std::pair<int, int> edge_ends(int e);

using Perm = std::vector<int>;
using Subset = std::vector<int>;  // sorted vertex set

Perm identity_perm(int n);
Perm compose(const Perm& a, const Perm& b);  // (a o b)(i) = a(b(i))
Perm inverse(const Perm& p);
bool is_identity(const Perm& p);
std::vector<Perm> all_permutations(int n);
std::string to_string(const Perm& p);  // cycle notation, "()" for identity

/// Complete graph on n vertices with an integer color on every edge.
struct ColorGraph {
  int n = 0;
  std::vector<int> colors;

  ColorGraph() = default;
  ColorGraph(int n, std::vector<int> colors);
  int color(int i, int j) const { return colors[edge_index(i, j)]; }
  ColorGraph permuted(const Perm& p) const;  // vertex i becomes p[i]
  bool fixed_by(const Perm& p) const;
};

struct NotAGroup : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Finite permutation group given by its full element list.
struct AutGroup {
  int n = 0;
  std::vector<Perm> elements;

  std::size_t order() const { return elements.size(); }
  bool contains(const Perm& p) const;
  bool is_trivial() const { return elements.size() == 1; }
  /// Identity present, closed under composition and inverses.
  bool is_group() const;
};

/// Closure of a generator set.
AutGroup generate_group(int n, const std::vector<Perm>& generators);

/// All label-preserving vertex permutations, by filtering the n! candidates.
AutGroup automorphisms(const ColorGraph& g);

/// Lexicographically least color vector over all vertex orders.
std::vector<int> canonical_form(const ColorGraph& g);
/// As canonical_form, but colors are also renamed by first occurrence, so
/// colorings that differ only by a bijection of colors coincide.
std::vector<int> canonical_partition(const ColorGraph& g);

Subset image(const Perm& p, const Subset& s);

std::vector<Subset> all_subsets(int n, int k);

/// Orbits of `items` under g, as lists of indices into `items`, each orbit
/// sorted and the orbits ordered by their least index. Throws
/// std::invalid_argument when the item set is not closed under g.
std::vector<std::vector<std::size_t>> orbit_partition(const AutGroup& g, const std::vector<Subset>& items);

/// (1/|G|) * sum of fixed-point counts. Throws NotAGroup when g fails the
/// closure check.
std::size_t burnside_count(const AutGroup& g, const std::vector<Subset>& items);

/// C(m,2) - m + 2: the largest possible number of orbits on unordered pairs
/// for a nontrivial group acting faithfully on m points.
std::size_t pair_orbit_bound(int m);

/// Name of an unlabeled graph: connected components are looked up in a small
/// catalog (P2..P5, K3, K4, K5, C4, C5, K1,3, K1,4, fork, K2,3, paw, ...)
/// and joined with '+'. Isolated vertices are dropped; no edges gives "empty".
/// Components missing from the catalog print as "G<v>,<e>".
std::string classify_graph(int n, const std::vector<std::pair<int, int>>& edges);

}  // namespace reptile::coxeter
