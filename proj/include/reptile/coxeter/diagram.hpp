#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "reptile/angles/angle_form.hpp"
#include "reptile/coxeter/graph.hpp"

namespace reptile::coxeter {

using angles::AngleForm;
using angles::RelationSet;

/// Unordered multiset of three labels, stored sorted.
struct TriangleType {
  std::array<AngleForm, 3> labels;

  TriangleType() = default;
  TriangleType(AngleForm a, AngleForm b, AngleForm c, const RelationSet& r = {});
  static TriangleType parse(const std::string& text, const RelationSet& r = {});  // "(alpha, beta, gamma)"

  bool contains(const AngleForm& f) const;
  std::string to_string() const;
  friend bool operator==(const TriangleType& a, const TriangleType& b) { return a.labels == b.labels; }
  friend bool operator<(const TriangleType& a, const TriangleType& b) { return a.labels < b.labels; }
};

/// Complete graph on n vertices (facets) with an angle label on every edge.
/// Labels are kept in normal form under the diagram's relation set.
class CoxeterDiagram {
 public:
  CoxeterDiagram() = default;
  CoxeterDiagram(int n, std::vector<AngleForm> labels, RelationSet r = {});

  int size() const { return n_; }
  const RelationSet& relations() const { return r_; }
  const AngleForm& label(int i, int j) const { return labels_[edge_index(i, j)]; }
  const std::vector<AngleForm>& labels() const { return labels_; }
  void set_label(int i, int j, const AngleForm& f);

  const std::vector<std::string>& names() const { return names_; }
  void set_names(std::vector<std::string> names);
  const std::string& name(int v) const { return names_[v]; }
  int vertex(const std::string& name) const;

  /// Distinct labels in increasing order.
  std::vector<AngleForm> alphabet() const;
  /// Colors are positions in alphabet().
  ColorGraph colors() const;

  TriangleType triangle_type(int i, int j, int k) const;
  std::vector<Subset> triangles() const { return all_subsets(n_, 3); }
  std::vector<Subset> triangles_of_type(const TriangleType& t) const;
  std::vector<Subset> edges_with_label(const AngleForm& f) const;
  std::size_t count(const TriangleType& t) const { return triangles_of_type(t).size(); }

  std::string edge_name(int i, int j) const;

 private:
  int n_ = 0;
  std::vector<AngleForm> labels_;
  RelationSet r_;
  std::vector<std::string> names_;
};

AutGroup automorphisms(const CoxeterDiagram& d);

std::vector<std::vector<Subset>> vertex_orbits(const CoxeterDiagram& d);
/// Orbits on all edges, or only on edges carrying `label`.
std::vector<std::vector<Subset>> edge_orbits(const CoxeterDiagram& d, const std::optional<AngleForm>& label = {});
/// Orbits on all triangles, or only on the copies of `type`.
std::vector<std::vector<Subset>> triangle_orbits(const CoxeterDiagram& d, const std::optional<TriangleType>& type = {});

/// The copies of t fall into at least four orbits.
bool is_rich(const CoxeterDiagram& d, const TriangleType& t);

/// Isomorphism class name of the subgraph formed by edges labeled f.
std::string label_subgraph(const CoxeterDiagram& d, const AngleForm& f);

/// Lexicographically least alphabet-indexed color vector; equal for two
/// diagrams over the same alphabet iff they are isomorphic.
std::vector<int> canonical_form(const CoxeterDiagram& d);

// Fixture format:
//   {"name": ..., "vertices": ["u","v",...],
//    "relations": {"alpha": "pi - 2*beta", ...},
//    "labels": {"uv": "2*beta", "u-w": "alpha", ...}}
// Edge keys are two vertex names, either concatenated (single-character names)
// or joined by '-'.
CoxeterDiagram diagram_from_json(const nlohmann::json& j);
nlohmann::json to_json(const CoxeterDiagram& d);
CoxeterDiagram load_diagram(const std::string& path);

RelationSet relations_from_json(const nlohmann::json& j);
nlohmann::json to_json(const RelationSet& r);

}  // namespace reptile::coxeter
