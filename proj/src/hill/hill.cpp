#include "reptile/hill/hill.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <set>

namespace reptile::hill {

namespace {

using Point = std::vector<Rational>;

const Rational half(1, 2);

long floor_q(const Rational& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f.get_si();
}

long ceil_q(const Rational& q) {
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return c.get_si();
}

// exact inverse by Gauss-Jordan; a is row-major d x d
std::vector<Rational> inverse(std::vector<Rational> a, int d) {
  std::vector<Rational> inv(static_cast<std::size_t>(d) * d, Rational(0));
  for (int i = 0; i < d; ++i) inv[i * d + i] = 1;
  for (int c = 0; c < d; ++c) {
    int p = c;
    while (p < d && sgn(a[p * d + c]) == 0) ++p;
    if (p == d) throw gram::DegenerateSimplex("singular edge matrix");
    for (int j = 0; j < d; ++j) {
      std::swap(a[c * d + j], a[p * d + j]);
      std::swap(inv[c * d + j], inv[p * d + j]);
    }
    Rational piv = a[c * d + c];
    for (int j = 0; j < d; ++j) {
      a[c * d + j] /= piv;
      inv[c * d + j] /= piv;
    }
    for (int r = 0; r < d; ++r) {
      if (r == c || sgn(a[r * d + c]) == 0) continue;
      Rational f = a[r * d + c];
      for (int j = 0; j < d; ++j) {
        a[r * d + j] -= f * a[c * d + j];
        inv[r * d + j] -= f * inv[c * d + j];
      }
    }
  }
  return inv;
}

// barycentric coordinates against a fixed simplex, with the inverse cached
struct Barycentric {
  const EuclideanSimplex& s;
  int d;
  std::vector<Rational> inv;

  explicit Barycentric(const EuclideanSimplex& s_) : s(s_), d(s_.dim()) {
    std::vector<Rational> e(static_cast<std::size_t>(d) * d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) e[i * d + j] = s.vertices[j + 1][i] - s.vertices[0][i];
    inv = inverse(std::move(e), d);
  }

  std::vector<Rational> operator()(const Point& p) const {
    std::vector<Rational> lam(d + 1, Rational(0));
    Rational rest = 1;
    for (int i = 0; i < d; ++i) {
      Rational x = 0;
      for (int j = 0; j < d; ++j) x += inv[i * d + j] * (p[j] - s.vertices[0][j]);
      lam[i + 1] = x;
      rest -= x;
    }
    lam[0] = rest;
    return lam;
  }

  bool inside(const Point& p) const {
    auto lam = (*this)(p);
    return std::all_of(lam.begin(), lam.end(), [](const Rational& x) { return sgn(x) >= 0; });
  }
};

std::vector<Rational> sorted_distances(const EuclideanSimplex& s) {
  auto d = s.squared_distances();
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

EuclideanSimplex hill_simplex(int d, int i) {
  if (d < 2) throw std::invalid_argument("hill_simplex: need d >= 2");
  if (i < 0 || i > 2) throw std::invalid_argument("hill_simplex: only H^0, H^1 and H^2 are built");
  std::vector<Point> v;
  for (int k = 0; k <= d; ++k) {
    Point p(d, Rational(0));
    for (int j = 0; j < k; ++j) p[j] = half;
    v.push_back(p);
  }
  if (i >= 1) v[1][0] = 1;
  if (i == 2) v[2][0] = v[2][1] = 1;
  return EuclideanSimplex(v);
}

EuclideanSimplex scaled(const EuclideanSimplex& s, const Rational& m) {
  auto v = s.vertices;
  for (auto& p : v)
    for (auto& x : p) x *= m;
  return EuclideanSimplex(v);
}

int LatticeTile::last_axis() const {
  std::vector<bool> used(dim(), false);
  for (int s : steps) used[std::abs(s) - 1] = true;
  for (int a = 0; a < dim(); ++a)
    if (!used[a]) return a;
  throw std::logic_error("LatticeTile: steps use every axis");
}

EuclideanSimplex LatticeTile::simplex() const {
  const int d = dim();
  Point cur(d);
  for (int i = 0; i < d; ++i) cur[i] = Rational(n[i]) + half;
  std::vector<Point> v{cur};
  for (int k = 0; k + 1 < d; ++k) {
    int ax = std::abs(steps[k]) - 1;
    cur[ax] += steps[k] > 0 ? half : -half;
    if (k + 2 < d) v.push_back(cur);
  }
  int last = last_axis();
  Point a = cur, b = cur;
  a[last] += half;
  b[last] -= half;
  v.push_back(a);
  v.push_back(b);
  return EuclideanSimplex(v);
}

std::string LatticeTile::to_string() const {
  std::string s = "z=(";
  for (int i = 0; i < dim(); ++i) s += (i ? "," : "") + std::to_string(n[i]) + "+1/2";
  s += ") steps=(";
  for (std::size_t k = 0; k < steps.size(); ++k) s += (k ? "," : "") + std::string(steps[k] > 0 ? "+" : "-") + std::to_string(std::abs(steps[k]));
  return s + ")";
}

std::vector<std::vector<int>> signed_steps(int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::vector<bool> used(d, false);
  std::function<void()> rec = [&] {
    if (static_cast<int>(cur.size()) == d - 1) {
      out.push_back(cur);
      return;
    }
    for (int a = 0; a < d; ++a) {
      if (used[a]) continue;
      used[a] = true;
      for (int sg : {1, -1}) {
        cur.push_back(sg * (a + 1));
        rec();
        cur.pop_back();
      }
      used[a] = false;
    }
  };
  rec();
  return out;
}

std::vector<LatticeTile> tiles_around(const std::vector<long>& n) {
  std::vector<LatticeTile> out;
  for (auto& s : signed_steps(static_cast<int>(n.size()))) out.push_back({n, s});
  return out;
}

std::vector<LatticeTile> tiles_inside(const EuclideanSimplex& target) {
  const int d = target.dim();
  Barycentric bary(target);
  std::vector<long> lo(d), hi(d);
  for (int i = 0; i < d; ++i) {
    Rational mn = target.vertices[0][i], mx = mn;
    for (const auto& p : target.vertices) {
      mn = std::min(mn, p[i]);
      mx = std::max(mx, p[i]);
    }
    lo[i] = floor_q(mn);
    hi[i] = ceil_q(mx) - 1;
  }
  auto steps = signed_steps(d);
  std::vector<LatticeTile> out;
  std::vector<long> n = lo;
  while (true) {
    for (const auto& s : steps) {
      LatticeTile t{n, s};
      auto sx = t.simplex();
      if (std::all_of(sx.vertices.begin(), sx.vertices.end(), [&](const Point& p) { return bary.inside(p); }))
        out.push_back(std::move(t));
    }
    int i = 0;
    while (i < d && n[i] == hi[i]) n[i] = lo[i], ++i;
    if (i == d) break;
    ++n[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Rational> barycentric(const EuclideanSimplex& s, const std::vector<Rational>& p) {
  if (static_cast<int>(p.size()) != s.dim()) throw std::invalid_argument("barycentric: dimension mismatch");
  return Barycentric(s)(p);
}

bool congruent(const EuclideanSimplex& a, const EuclideanSimplex& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("congruent: dimension mismatch");
  if (sorted_distances(a) != sorted_distances(b)) return false;
  const int n = a.dim() + 1;
  auto da = a.squared_distances(), db = b.squared_distances();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j) ok = da[i * n + j] == db[p[i] * n + p[j]];
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

bool congruent(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("congruent: dimension mismatch");
  const auto n = static_cast<int>(a.cols());
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j)
        ok = std::abs((a.col(i) - a.col(j)).squaredNorm() - (b.col(p[i]) - b.col(p[j])).squaredNorm()) <= tol;
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

std::optional<EuclideanSimplex> simplex_union(const EuclideanSimplex& a, const EuclideanSimplex& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("simplex_union: dimension mismatch");
  std::vector<Point> shared, only_a, only_b;
  for (const auto& p : a.vertices)
    (std::find(b.vertices.begin(), b.vertices.end(), p) != b.vertices.end() ? shared : only_a).push_back(p);
  for (const auto& p : b.vertices)
    if (std::find(a.vertices.begin(), a.vertices.end(), p) == a.vertices.end()) only_b.push_back(p);
  if (only_a.size() != 1 || only_b.size() != 1) return std::nullopt;
  const Point &x = only_a[0], &y = only_b[0];
  const int d = a.dim();
  for (std::size_t w = 0; w < shared.size(); ++w) {
    // w = x + t (y - x) with 0 < t < 1
    std::optional<Rational> t;
    bool on = true;
    for (int i = 0; i < d && on; ++i) {
      Rational dy = y[i] - x[i], dw = shared[w][i] - x[i];
      if (sgn(dy) == 0) {
        on = sgn(dw) == 0;
      } else if (!t) {
        t = dw / dy;
      } else {
        on = *t == dw / dy;
      }
    }
    if (!on || !t || sgn(*t) <= 0 || *t >= 1) continue;
    std::vector<Point> v;
    for (std::size_t k = 0; k < shared.size(); ++k)
      if (k != w) v.push_back(shared[k]);
    v.push_back(x);
    v.push_back(y);
    EuclideanSimplex u(v);
    if (u.volume() != a.volume() + b.volume()) return std::nullopt;
    return u;
  }
  return std::nullopt;
}

bool compatible(const LatticeTile& a, const LatticeTile& b) {
  if (a.n != b.n || a.dim() != b.dim()) return false;
  const int d = a.dim();
  for (int k = 0; k + 2 < d; ++k)
    if (a.steps[k] != b.steps[k]) return false;
  return std::abs(a.steps[d - 2]) != std::abs(b.steps[d - 2]);
}

std::map<std::size_t, std::size_t> CompatibilityGraph::profile() const {
  std::map<std::size_t, std::size_t> p;
  for (const auto& c : components) ++p[c.size()];
  return p;
}

bool CompatibilityGraph::all_four_cycles() const {
  for (const auto& c : components) {
    if (c.size() != 4) return false;
    for (int v : c)
      if (adj[v].size() != 2) return false;
  }
  return true;
}

CompatibilityGraph compatibility_graph(const std::vector<LatticeTile>& tiles) {
  CompatibilityGraph g;
  const int n = static_cast<int>(tiles.size());
  g.adj.assign(n, {});
  // only tiles in the same cube with the same prefix can be compatible
  std::map<std::pair<std::vector<long>, std::vector<int>>, std::vector<int>> bucket;
  for (int i = 0; i < n; ++i) {
    const auto& t = tiles[i];
    std::vector<int> prefix(t.steps.begin(), t.steps.end() - 1);
    bucket[{t.n, prefix}].push_back(i);
  }
  for (const auto& [key, members] : bucket)
    for (std::size_t x = 0; x < members.size(); ++x)
      for (std::size_t y = x + 1; y < members.size(); ++y)
        if (compatible(tiles[members[x]], tiles[members[y]])) {
          g.adj[members[x]].push_back(members[y]);
          g.adj[members[y]].push_back(members[x]);
        }
  std::vector<int> comp(n, -1);
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> c{s}, stack{s};
    comp[s] = static_cast<int>(g.components.size());
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.adj[v])
        if (comp[w] < 0) {
          comp[w] = comp[s];
          c.push_back(w);
          stack.push_back(w);
        }
    }
    std::sort(c.begin(), c.end());
    g.components.push_back(c);
  }
  for (auto& a : g.adj) std::sort(a.begin(), a.end());
  return g;
}

bool facets_match(const std::vector<LatticeTile>& tiles, const EuclideanSimplex& target) {
  Barycentric bary(target);
  std::map<std::vector<Point>, int> count;
  for (const auto& t : tiles) {
    auto v = t.simplex().vertices;
    for (std::size_t skip = 0; skip < v.size(); ++skip) {
      std::vector<Point> f;
      for (std::size_t k = 0; k < v.size(); ++k)
        if (k != skip) f.push_back(v[k]);
      std::sort(f.begin(), f.end());
      ++count[f];
    }
  }
  for (const auto& [f, c] : count) {
    if (c == 2) continue;
    if (c > 2) return false;
    // a lone facet must lie in a facet of the target
    std::vector<std::vector<Rational>> lam;
    for (const auto& p : f) lam.push_back(bary(p));
    bool on_boundary = false;
    for (int k = 0; k <= target.dim() && !on_boundary; ++k)
      on_boundary = std::all_of(lam.begin(), lam.end(), [k](const auto& l) { return sgn(l[k]) == 0; });
    if (!on_boundary) return false;
  }
  return true;
}

bool TilingReport::ok() const {
  return tiles == expected_tiles && volume_ok && congruent_ok && facets_ok && (pairs.empty() || pairing_ok);
}

namespace {

long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

TilingReport check_tiles(int d, int m, const std::vector<LatticeTile>& tiles, const EuclideanSimplex& target,
                         std::size_t expected) {
  TilingReport r;
  r.d = d;
  r.m = m;
  r.tiles = tiles.size();
  r.expected_tiles = expected;
  r.target_volume = target.volume();
  r.total_volume = 0;
  auto base = hill_simplex(d, 1);
  r.congruent_ok = true;
  for (const auto& t : tiles) {
    auto s = t.simplex();
    r.total_volume += s.volume();
    r.congruent_ok = r.congruent_ok && congruent(s, base);
  }
  r.volume_ok = r.total_volume == r.target_volume;
  r.facets_ok = facets_match(tiles, target);
  r.components = compatibility_graph(tiles).profile();
  return r;
}

}  // namespace

std::vector<LatticeTile> generate_h1_tiling(int d, int m) {
  if (d < 2) throw std::invalid_argument("generate_h1_tiling: need d >= 2");
  if (m < 1) throw std::invalid_argument("generate_h1_tiling: need m >= 1");
  return tiles_inside(scaled(hill_simplex(d, 1), m));
}

TilingReport check_h1_tiling(int d, int m) {
  auto tiles = generate_h1_tiling(d, m);
  return check_tiles(d, m, tiles, scaled(hill_simplex(d, 1), m), static_cast<std::size_t>(ipow(m, d)));
}

TilingReport pair_h2_tiling(int d, int m, std::vector<LatticeTile>* tiles_out) {
  if (d < 2) throw std::invalid_argument("pair_h2_tiling: need d >= 2");
  if (m < 1) throw std::invalid_argument("pair_h2_tiling: need m >= 1");
  auto target = scaled(hill_simplex(d, 2), m);
  auto tiles = tiles_inside(target);
  auto r = check_tiles(d, m, tiles, target, 2 * static_cast<std::size_t>(ipow(m, d)));
  auto g = compatibility_graph(tiles);
  auto h2 = hill_simplex(d, 2);
  for (const auto& c : g.components) {
    // perfect matching inside the component (at most four tiles)
    std::vector<std::pair<int, int>> match;
    std::vector<bool> used(tiles.size(), false);
    std::function<bool(std::size_t)> rec = [&](std::size_t i) {
      while (i < c.size() && used[c[i]]) ++i;
      if (i == c.size()) return true;
      int v = c[i];
      used[v] = true;
      for (int w : g.adj[v]) {
        if (used[w]) continue;
        used[w] = true;
        match.emplace_back(v, w);
        if (rec(i + 1)) return true;
        match.pop_back();
        used[w] = false;
      }
      used[v] = false;
      return false;
    };
    if (!rec(0)) {
      std::string msg = "pair_h2_tiling: component of size " + std::to_string(c.size()) + " has no perfect matching:";
      for (int v : c) msg += " [" + tiles[v].to_string() + "]";
      throw PairingFailure(msg);
    }
    for (auto [v, w] : match) {
      auto u = simplex_union(tiles[v].simplex(), tiles[w].simplex());
      if (!u || !congruent(*u, h2))
        throw PairingFailure("pair_h2_tiling: union of [" + tiles[v].to_string() + "] and [" + tiles[w].to_string() +
                             "] is not a copy of H^2");
      r.pairs.emplace_back(v, w);
    }
  }
  r.pairing_ok = r.pairs.size() == static_cast<std::size_t>(ipow(m, d));
  if (tiles_out) *tiles_out = std::move(tiles);
  return r;
}

nlohmann::json to_json(const EuclideanSimplex& s) {
  auto out = nlohmann::json::array();
  for (const auto& p : s.vertices) {
    auto q = nlohmann::json::array();
    for (const auto& x : p) q.push_back(x.get_str());
    out.push_back(q);
  }
  return out;
}

nlohmann::json to_json(const LatticeTile& t) {
  return {{"n", t.n}, {"steps", t.steps}, {"vertices", to_json(t.simplex())}};
}

nlohmann::json to_json(const TilingReport& r) {
  nlohmann::json comps = nlohmann::json::object();
  for (const auto& [size, cnt] : r.components) comps[std::to_string(size)] = cnt;
  nlohmann::json j = {{"d", r.d},
                      {"m", r.m},
                      {"tiles", r.tiles},
                      {"expected_tiles", r.expected_tiles},
                      {"total_volume", r.total_volume.get_str()},
                      {"target_volume", r.target_volume.get_str()},
                      {"volume_ok", r.volume_ok},
                      {"congruent_ok", r.congruent_ok},
                      {"facets_ok", r.facets_ok},
                      {"components", comps},
                      {"ok", r.ok()}};
  if (!r.pairs.empty()) {
    j["pairs"] = r.pairs.size();
    j["pairing_ok"] = r.pairing_ok;
  }
  return j;
}

}  // namespace reptile::hill
