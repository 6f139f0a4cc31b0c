#pragma once

#include <climits>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "reptile/coxeter/diagram.hpp"

namespace reptile::coxeter {

/// Every triangle carrying `trigger` on some edge must be one of `allowed`.
struct TriangleRule {
  AngleForm trigger;
  std::vector<TriangleType> allowed;
};

/// The edges labeled `label` must form one of the named shapes
/// (names as produced by classify_graph).
struct ShapeRule {
  AngleForm label;
  std::vector<std::string> shapes;
};

struct LabelBound {
  AngleForm label;
  int min = 0;
  int max = INT_MAX;
};

/// Hypotheses a diagram has to satisfy. Everything is optional; an empty
/// constraint set accepts every labeling.
struct DiagramConstraints {
  std::vector<TriangleRule> rules;
  std::vector<TriangleType> forbidden;
  /// Extra test applied to every triangle type that occurs (e.g. existence of
  /// a spherical triangle with those angles).
  std::function<bool(const TriangleType&)> triangle_ok;
  std::optional<TriangleType> rich_in;
  std::vector<ShapeRule> shapes;
  std::vector<LabelBound> bounds;
  bool trivial_automorphisms = false;
};

struct EnumerationStats {
  std::size_t nodes = 0;
  std::size_t leaves = 0;
  std::size_t accepted = 0;  // before isomorphism reduction
};

/// Depth-first assignment of colors 0..k-1 to the edges of K_n in index
/// order. `partial(colors, e)` is called after edge e is assigned and may
/// return false to cut the branch; `leaf` sees every complete coloring.
void for_each_coloring(int n, int k, const std::function<bool(const std::vector<int>&, int)>& partial,
                       const std::function<void(const ColorGraph&)>& leaf);

/// All labelings of K_n over `alphabet` that meet `c`, one per isomorphism
/// class, each given in canonical vertex order and sorted by canonical form.
std::vector<CoxeterDiagram> enumerate_diagrams(int n, const std::vector<AngleForm>& alphabet,
                                               const DiagramConstraints& c, const RelationSet& r = {},
                                               EnumerationStats* stats = nullptr);

/// Hypotheses on abstract edge colorings (set partitions of the edges).
struct PartitionConstraints {
  /// At least `min_types` distinct triangle types occur `min_copies` or more times.
  int min_types = 0;
  int min_copies = 0;
  bool trivial_automorphisms = false;
  std::function<bool(const ColorGraph&)> extra;
};

/// Set partitions of the edges of K_n (restricted growth strings), reduced
/// modulo vertex relabeling and renaming of the parts.
std::vector<ColorGraph> enumerate_edge_partitions(int n, const PartitionConstraints& c,
                                                  EnumerationStats* stats = nullptr);

/// Number of set partitions of the edges of K_n, before any reduction.
std::size_t count_edge_partitions(int n);

}  // namespace reptile::coxeter
