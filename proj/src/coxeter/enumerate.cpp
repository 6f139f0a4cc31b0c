#include "reptile/coxeter/enumerate.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>

namespace reptile::coxeter {

namespace {

// Triangles of K_n grouped by their largest edge, so a triangle is checked
// exactly once, right after its last edge gets a color.
std::vector<std::vector<std::array<int, 3>>> triangles_by_last_edge(int n) {
  std::vector<std::vector<std::array<int, 3>>> out(edge_count(n));
  for (const auto& t : all_subsets(n, 3)) {
    std::array<int, 3> e{edge_index(t[0], t[1]), edge_index(t[0], t[2]), edge_index(t[1], t[2])};
    std::sort(e.begin(), e.end());
    out[e[2]].push_back(e);
  }
  return out;
}

void recurse(int e, int m, int k, std::vector<int>& c,
             const std::function<bool(const std::vector<int>&, int)>& partial,
             const std::function<void(const ColorGraph&)>& leaf, int n) {
  if (e == m) {
    leaf(ColorGraph(n, c));
    return;
  }
  for (int x = 0; x < k; ++x) {
    c[e] = x;
    if (!partial || partial(c, e)) recurse(e + 1, m, k, c, partial, leaf, n);
  }
  c[e] = -1;
}

}  // namespace

void for_each_coloring(int n, int k, const std::function<bool(const std::vector<int>&, int)>& partial,
                       const std::function<void(const ColorGraph&)>& leaf) {
  int m = edge_count(n);
  std::vector<int> c(m, -1);
  recurse(0, m, k, c, partial, leaf, n);
}

std::vector<CoxeterDiagram> enumerate_diagrams(int n, const std::vector<AngleForm>& alphabet_in,
                                               const DiagramConstraints& c, const RelationSet& r,
                                               EnumerationStats* stats) {
  if (n < 2) throw std::invalid_argument("enumerate_diagrams: need n >= 2");
  std::set<AngleForm> uniq;
  for (const auto& f : alphabet_in) uniq.insert(r.normalize(f));
  std::vector<AngleForm> alphabet(uniq.begin(), uniq.end());
  const int k = static_cast<int>(alphabet.size());
  if (k == 0) return {};
  auto color_of = [&](const AngleForm& f) -> int {
    auto it = std::lower_bound(alphabet.begin(), alphabet.end(), r.normalize(f));
    if (it == alphabet.end() || *it != r.normalize(f)) return -1;
    return static_cast<int>(it - alphabet.begin());
  };
  auto type_of = [&](int a, int b, int cc) { return TriangleType(alphabet[a], alphabet[b], alphabet[cc]); };

  // triangle table over sorted color triples
  auto idx3 = [k](int a, int b, int cc) {
    std::array<int, 3> t{a, b, cc};
    std::sort(t.begin(), t.end());
    return (t[0] * k + t[1]) * k + t[2];
  };
  std::vector<char> tri_ok(static_cast<std::size_t>(k) * k * k, 0);
  std::set<TriangleType> forbidden;
  for (const auto& t : c.forbidden) forbidden.insert(TriangleType(t.labels[0], t.labels[1], t.labels[2], r));
  std::vector<std::pair<int, std::set<TriangleType>>> rules;
  for (const auto& rule : c.rules) {
    std::set<TriangleType> allowed;
    for (const auto& t : rule.allowed) allowed.insert(TriangleType(t.labels[0], t.labels[1], t.labels[2], r));
    rules.emplace_back(color_of(rule.trigger), std::move(allowed));
  }
  for (int a = 0; a < k; ++a)
    for (int b = a; b < k; ++b)
      for (int cc = b; cc < k; ++cc) {
        TriangleType t = type_of(a, b, cc);
        bool ok = !forbidden.count(t);
        for (const auto& [trig, allowed] : rules)
          if (ok && trig >= 0 && (a == trig || b == trig || cc == trig) && !allowed.count(t)) ok = false;
        if (ok && c.triangle_ok) ok = c.triangle_ok(t);
        tri_ok[idx3(a, b, cc)] = ok;
      }
  std::vector<char> pair_ok(static_cast<std::size_t>(k) * k, 0);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int cc = 0; cc < k; ++cc)
        if (tri_ok[idx3(a, b, cc)]) pair_ok[a * k + b] = 1;

  std::optional<std::array<int, 3>> rich;
  if (c.rich_in) {
    std::array<int, 3> t{};
    for (int i = 0; i < 3; ++i) t[i] = color_of(c.rich_in->labels[i]);
    if (std::find(t.begin(), t.end(), -1) != t.end()) return {};  // the rich type cannot occur
    std::sort(t.begin(), t.end());
    rich = t;
  }
  std::vector<int> lo(k, 0), hi(k, INT_MAX);
  for (const auto& b : c.bounds) {
    int col = color_of(b.label);
    if (col < 0) {
      if (b.min > 0) return {};
      continue;
    }
    lo[col] = std::max(lo[col], b.min);
    hi[col] = std::min(hi[col], b.max);
  }

  const int m = edge_count(n);
  auto by_last = triangles_by_last_edge(n);
  auto all_tris = all_subsets(n, 3);
  // for each edge, the triangles through it (as edge triples)
  std::vector<std::array<int, 3>> tri_edges;
  for (const auto& t : all_tris)
    tri_edges.push_back({edge_index(t[0], t[1]), edge_index(t[0], t[2]), edge_index(t[1], t[2])});

  EnumerationStats local;
  std::vector<int> count(k, 0);
  auto partial = [&](const std::vector<int>& col, int e) {
    ++local.nodes;
    for (const auto& t : by_last[e])
      if (!tri_ok[idx3(col[t[0]], col[t[1]], col[t[2]])]) return false;
    // a pair of assigned edges in an open triangle must have some completion
    for (const auto& t : tri_edges) {
      int assigned = (t[0] <= e) + (t[1] <= e) + (t[2] <= e);
      if (assigned != 2) continue;
      int a = -1, b = -1;
      for (int x : t)
        if (x <= e) (a < 0 ? a : b) = col[x];
      if (!pair_ok[a * k + b]) return false;
    }
    std::fill(count.begin(), count.end(), 0);
    for (int i = 0; i <= e; ++i) ++count[col[i]];
    int need = 0;
    for (int x = 0; x < k; ++x) {
      if (count[x] > hi[x]) return false;
      need += std::max(0, lo[x] - count[x]);
    }
    if (need > m - 1 - e) return false;
    if (rich) {
      // triangles that can still become copies of the rich type
      int possible = 0;
      for (const auto& t : tri_edges) {
        std::array<int, 3> want = *rich;
        bool ok = true;
        for (int x : t) {
          if (x > e) continue;
          auto it = std::find(want.begin(), want.end(), col[x]);
          if (it == want.end()) {
            ok = false;
            break;
          }
          *it = -1;
        }
        possible += ok;
      }
      if (possible < 4) return false;
    }
    return true;
  };

  std::map<std::vector<int>, CoxeterDiagram> found;
  auto leaf = [&](const ColorGraph& g) {
    ++local.leaves;
    std::vector<AngleForm> labels;
    for (int x : g.colors) labels.push_back(alphabet[x]);
    CoxeterDiagram d(n, labels, r);
    for (const auto& s : c.shapes) {
      auto name = label_subgraph(d, s.label);
      if (std::find(s.shapes.begin(), s.shapes.end(), name) == s.shapes.end()) return;
    }
    if (c.rich_in && !is_rich(d, *c.rich_in)) return;
    if (c.trivial_automorphisms && !automorphisms(g).is_trivial()) return;
    ++local.accepted;
    auto key = canonical_form(g);
    if (found.count(key)) return;
    std::vector<AngleForm> canon;
    for (int x : key) canon.push_back(alphabet[x]);
    found.emplace(key, CoxeterDiagram(n, canon, r));
  };
  for_each_coloring(n, k, partial, leaf);
  if (stats) *stats = local;
  std::vector<CoxeterDiagram> out;
  for (auto& [key, d] : found) out.push_back(std::move(d));
  return out;
}

namespace {

void partitions(int e, int m, int used, std::vector<int>& c, const std::function<void(const std::vector<int>&)>& f) {
  if (e == m) {
    f(c);
    return;
  }
  for (int x = 0; x <= used; ++x) {
    c[e] = x;
    partitions(e + 1, m, std::max(used, x + 1), c, f);
  }
}

}  // namespace

std::size_t count_edge_partitions(int n) {
  std::size_t total = 0;
  int m = edge_count(n);
  std::vector<int> c(m, 0);
  partitions(0, m, 0, c, [&](const std::vector<int>&) { ++total; });
  return total;
}

std::vector<ColorGraph> enumerate_edge_partitions(int n, const PartitionConstraints& cons, EnumerationStats* stats) {
  if (n < 2) throw std::invalid_argument("enumerate_edge_partitions: need n >= 2");
  const int m = edge_count(n);
  auto tris = all_subsets(n, 3);
  EnumerationStats local;
  std::set<std::vector<int>> found;
  std::vector<int> c(m, 0);
  partitions(0, m, 0, c, [&](const std::vector<int>& col) {
    ++local.leaves;
    ColorGraph g(n, col);
    if (cons.min_types > 0) {
      std::map<std::array<int, 3>, int> types;
      for (const auto& t : tris) {
        std::array<int, 3> ty{g.color(t[0], t[1]), g.color(t[0], t[2]), g.color(t[1], t[2])};
        std::sort(ty.begin(), ty.end());
        ++types[ty];
      }
      int enough = 0;
      for (const auto& [ty, cnt] : types) enough += cnt >= cons.min_copies;
      if (enough < cons.min_types) return;
    }
    if (cons.extra && !cons.extra(g)) return;
    if (cons.trivial_automorphisms && !automorphisms(g).is_trivial()) return;
    ++local.accepted;
    found.insert(canonical_partition(g));
  });
  if (stats) *stats = local;
  std::vector<ColorGraph> out;
  for (const auto& key : found) out.emplace_back(n, key);
  return out;
}

}  // namespace reptile::coxeter
