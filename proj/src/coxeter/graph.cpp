#include "reptile/coxeter/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace reptile::coxeter {

std::pair<int, int> edge_ends(int e) {
  int j = 1;
  while ((j + 1) * j / 2 <= e) ++j;
  return {e - j * (j - 1) / 2, j};
}

Perm identity_perm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

bool is_identity(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

std::vector<Perm> all_permutations(int n) {
  std::vector<Perm> out;
  Perm p = identity_perm(n);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::string to_string(const Perm& p) {
  std::string s;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    s += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) s += " ";
      s += std::to_string(j);
      first = false;
      j = p[j];
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

ColorGraph::ColorGraph(int n_, std::vector<int> c) : n(n_), colors(std::move(c)) {
  if (n < 1) throw std::invalid_argument("ColorGraph: need at least one vertex");
  if (static_cast<int>(colors.size()) != edge_count(n))
    throw std::invalid_argument("ColorGraph: expected " + std::to_string(edge_count(n)) + " edge colors");
}

ColorGraph ColorGraph::permuted(const Perm& p) const {
  ColorGraph g = *this;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) g.colors[edge_index(p[i], p[j])] = colors[edge_index(i, j)];
  return g;
}

bool ColorGraph::fixed_by(const Perm& p) const {
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (colors[edge_index(p[i], p[j])] != colors[edge_index(i, j)]) return false;
  return true;
}

bool AutGroup::contains(const Perm& p) const {
  return std::find(elements.begin(), elements.end(), p) != elements.end();
}

bool AutGroup::is_group() const {
  if (elements.empty() || !contains(identity_perm(n))) return false;
  std::set<Perm> s(elements.begin(), elements.end());
  if (s.size() != elements.size()) return false;
  for (const auto& a : elements) {
    if (!s.count(inverse(a))) return false;
    for (const auto& b : elements)
      if (!s.count(compose(a, b))) return false;
  }
  return true;
}

AutGroup generate_group(int n, const std::vector<Perm>& generators) {
  std::set<Perm> seen{identity_perm(n)};
  std::vector<Perm> frontier{identity_perm(n)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& x : frontier)
      for (const auto& g : generators) {
        Perm y = compose(g, x);
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return AutGroup{n, {seen.begin(), seen.end()}};
}

AutGroup automorphisms(const ColorGraph& g) {
  AutGroup out{g.n, {}};
  for (auto& p : all_permutations(g.n))
    if (g.fixed_by(p)) out.elements.push_back(std::move(p));
  return out;
}

std::vector<int> canonical_form(const ColorGraph& g) {
  std::vector<int> best;
  for (const auto& p : all_permutations(g.n)) {
    auto c = g.permuted(p).colors;
    if (best.empty() || c < best) best = std::move(c);
  }
  return best;
}

namespace {

std::vector<int> rename_by_first_use(const std::vector<int>& c) {
  std::map<int, int> m;
  std::vector<int> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    auto it = m.find(c[i]);
    if (it == m.end()) it = m.emplace(c[i], static_cast<int>(m.size())).first;
    out[i] = it->second;
  }
  return out;
}

}  // namespace

std::vector<int> canonical_partition(const ColorGraph& g) {
  std::vector<int> best;
  for (const auto& p : all_permutations(g.n)) {
    auto c = rename_by_first_use(g.permuted(p).colors);
    if (best.empty() || c < best) best = std::move(c);
  }
  return best;
}

Subset image(const Perm& p, const Subset& s) {
  Subset r;
  r.reserve(s.size());
  for (int v : s) r.push_back(p[v]);
  std::sort(r.begin(), r.end());
  return r;
}

std::vector<Subset> all_subsets(int n, int k) {
  std::vector<Subset> out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + std::min(k, n), true);
  if (k > n) return out;
  do {
    Subset s;
    for (int i = 0; i < n; ++i)
      if (pick[i]) s.push_back(i);
    out.push_back(s);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::size_t>> orbit_partition(const AutGroup& g, const std::vector<Subset>& items) {
  std::map<Subset, std::size_t> where;
  for (std::size_t i = 0; i < items.size(); ++i) where.emplace(items[i], i);
  std::vector<int> orbit_of(items.size(), -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (orbit_of[i] >= 0) continue;
    std::vector<std::size_t> orb;
    for (const auto& p : g.elements) {
      auto it = where.find(image(p, items[i]));
      if (it == where.end()) throw std::invalid_argument("orbit_partition: item set not closed under the group");
      if (orbit_of[it->second] < 0) {
        orbit_of[it->second] = static_cast<int>(out.size());
        orb.push_back(it->second);
      }
    }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

std::size_t burnside_count(const AutGroup& g, const std::vector<Subset>& items) {
  if (!g.is_group()) throw NotAGroup("burnside_count: permutations do not form a group");
  std::size_t total = 0;
  for (const auto& p : g.elements)
    for (const auto& s : items)
      if (image(p, s) == s) ++total;
  if (total % g.order() != 0) throw NotAGroup("burnside_count: fixed-point sum not divisible by |G|");
  return total / g.order();
}

std::size_t pair_orbit_bound(int m) {
  if (m < 2) throw std::invalid_argument("pair_orbit_bound: need m >= 2");
  return static_cast<std::size_t>(m * (m - 1) / 2 - m + 2);
}

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

// Canonical adjacency string of a graph on k vertices (k <= 6).
std::vector<int> shape_key(int k, const EdgeList& edges) {
  std::vector<int> c(edge_count(k), 0);
  for (auto [a, b] : edges) c[edge_index(a, b)] = 1;
  if (k == 1) return {};
  // max instead of min so that edges come first; either is fine for a key
  std::vector<int> best;
  ColorGraph g(k, c);
  for (const auto& p : all_permutations(k)) {
    auto v = g.permuted(p).colors;
    if (best.empty() || v > best) best = std::move(v);
  }
  return best;
}

struct Named {
  const char* name;
  int k;
  EdgeList edges;
};

const std::vector<Named>& connected_catalog() {
  static const std::vector<Named> cat = {
      {"P2", 2, {{0, 1}}},
      {"P3", 3, {{0, 1}, {1, 2}}},
      {"K3", 3, {{0, 1}, {1, 2}, {0, 2}}},
      {"P4", 4, {{0, 1}, {1, 2}, {2, 3}}},
      {"K1,3", 4, {{0, 1}, {0, 2}, {0, 3}}},
      {"C4", 4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}},
      {"paw", 4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}},
      {"diamond", 4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}},
      {"K4", 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}},
      {"P5", 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}},
      {"fork", 5, {{0, 1}, {1, 2}, {2, 3}, {2, 4}}},
      {"K1,4", 5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}},
      {"C5", 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}},
      {"K2,3", 5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}},
      {"bull", 5, {{0, 1}, {1, 2}, {0, 2}, {1, 3}, {2, 4}}},
      {"house", 5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 4}}},
      {"W4", 5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}, {4, 2}, {4, 3}}},
      {"K5", 5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}},
  };
  return cat;
}

std::string component_name(int k, const EdgeList& edges) {
  static const std::map<std::pair<int, std::vector<int>>, std::string> index = [] {
    std::map<std::pair<int, std::vector<int>>, std::string> m;
    for (const auto& c : connected_catalog()) m.emplace(std::make_pair(c.k, shape_key(c.k, c.edges)), c.name);
    return m;
  }();
  if (k <= 6) {
    auto it = index.find({k, shape_key(k, edges)});
    if (it != index.end()) return it->second;
  }
  return "G" + std::to_string(k) + "," + std::to_string(edges.size());
}

}  // namespace

std::string classify_graph(int n, const EdgeList& edges) {
  std::vector<int> comp(n);
  std::iota(comp.begin(), comp.end(), 0);
  auto find = [&](int x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (auto [a, b] : edges) comp[find(a)] = find(b);
  std::map<int, std::vector<int>> members;
  for (auto [a, b] : edges) members[find(a)];
  for (int v = 0; v < n; ++v)
    if (members.count(find(v))) members[find(v)].push_back(v);
  // sort by (vertex count, name) so "P2+P3" rather than "P3+P2"
  std::vector<std::pair<int, std::string>> parts;
  for (auto& [root, vs] : members) {
    std::map<int, int> local;
    for (int v : vs) local.emplace(v, static_cast<int>(local.size()));
    EdgeList le;
    for (auto [a, b] : edges)
      if (find(a) == root) le.emplace_back(local[a], local[b]);
    int k = static_cast<int>(vs.size());
    parts.emplace_back(k, component_name(k, le));
  }
  if (parts.empty()) return "empty";
  std::sort(parts.begin(), parts.end());
  std::string s;
  for (const auto& [k, name] : parts) s += (s.empty() ? "" : "+") + name;
  return s;
}

}  // namespace reptile::coxeter
