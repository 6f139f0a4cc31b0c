#include "reptile/realize/tiling.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "reptile/spherical/triangle.hpp"

namespace reptile::realize {

using namespace spherical;

namespace {

constexpr double pi = std::numbers::pi;
constexpr double kMatch = 1e-7;  // angle / length bookkeeping tolerance

// Sorted sums of nonnegative integer combinations of three values, up to limit.
std::vector<double> combination_values(const std::array<double, 3>& v, double limit) {
  std::vector<double> out;
  for (int i = 0; i * v[0] <= limit + kMatch; ++i)
    for (int j = 0; i * v[0] + j * v[1] <= limit + kMatch; ++j)
      for (int k = 0; i * v[0] + j * v[1] + k * v[2] <= limit + kMatch; ++k) out.push_back(i * v[0] + j * v[1] + k * v[2]);
  std::sort(out.begin(), out.end());
  return out;
}

bool contains_value(const std::vector<double>& sorted, double x) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), x - kMatch);
  return it != sorted.end() && *it <= x + kMatch;
}

// Fan from the centre direction; robust for lunes, whose vertices include antipodes.
double polygon_area(const std::vector<Vec3>& poly) {
  Vec3 c = Vec3::Zero();
  for (const auto& p : poly) c += p;
  c.normalize();
  double a = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) a += triangle_area(c, poly[i], poly[(i + 1) % poly.size()]);
  return a;
}

struct Arc {
  int from, to;
  friend bool operator==(const Arc&, const Arc&) = default;
};

struct Corner {
  int v = -1;
  int out = -1;  // arc index leaving v
  int in = -1;   // arc index entering v
  double angle = 0;
};

class Searcher {
 public:
  Searcher(const TileSpec& tile, const SearchOptions& opt) : tile_(tile), opt_(opt) {
    ang_ = tile.radians();
    edge_ = tile.edges();
    gaps_ = combination_values(ang_, 2 * pi);
    lengths_ = combination_values(edge_, pi);
    min_angle_ = std::min({ang_[0], ang_[1], ang_[2]});
    for (int i = 0; i < 3; ++i) {
      int j = (i + 1) % 3, k = (i + 2) % 3;
      add_orientation(ang_[i], edge_[k], edge_[j]);
      add_orientation(ang_[i], edge_[j], edge_[k]);
    }
  }

  SearchResult run(const std::vector<Vec3>& target) {
    SearchResult res;
    double area = polygon_area(target);
    double ratio = area / tile_.area().get_d() / pi;
    int needed = static_cast<int>(std::lround(ratio));
    res.tiles_needed = needed;
    if (std::abs(ratio - needed) > 1e-6 || needed < 1 || (opt_.n_max > 0 && needed > opt_.n_max)) {
      res.status = SearchStatus::exhausted;
      return res;
    }
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < target.size(); ++i) verts_.push_back(target[i]);
    for (std::size_t i = 0; i < target.size(); ++i)
      arcs.push_back({static_cast<int>(i), static_cast<int>((i + 1) % target.size())});
    target_size_ = target.size();
    bool ok = false;
    try {
      ok = recurse(arcs, needed);
    } catch (const Budget&) {
      res.status = SearchStatus::aborted;
      res.nodes = nodes_;
      return res;
    }
    res.nodes = nodes_;
    if (!ok) {
      res.status = SearchStatus::exhausted;
      return res;
    }
    res.status = SearchStatus::found;
    SphTiling t;
    std::map<int, int> remap;
    auto id = [&](int v) {
      auto it = remap.find(v);
      if (it != remap.end()) return it->second;
      int n = static_cast<int>(t.vertices.size());
      t.vertices.push_back(verts_[v]);
      remap[v] = n;
      return n;
    };
    for (std::size_t i = 0; i < target_size_; ++i) t.target.push_back(id(static_cast<int>(i)));
    for (const auto& tr : placed_) t.tiles.push_back({id(tr[0]), id(tr[1]), id(tr[2])});
    res.tiling = std::move(t);
    return res;
  }

 private:
  struct Budget {};
  struct Orientation {
    double angle, l1, l2;
  };

  void add_orientation(double a, double l1, double l2) {
    for (const auto& o : orient_)
      if (std::abs(o.angle - a) < kMatch && std::abs(o.l1 - l1) < kMatch && std::abs(o.l2 - l2) < kMatch) return;
    orient_.push_back({a, l1, l2});
  }

  int vertex(const Vec3& p) {
    for (std::size_t i = 0; i < verts_.size(); ++i)
      if ((verts_[i] - p).norm() < opt_.eps * 10) return static_cast<int>(i);
    verts_.push_back(p);
    return static_cast<int>(verts_.size()) - 1;
  }

  std::vector<Corner> corners(const std::vector<Arc>& arcs) const {
    std::map<int, std::vector<int>> outs, ins;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      outs[arcs[i].from].push_back(static_cast<int>(i));
      ins[arcs[i].to].push_back(static_cast<int>(i));
    }
    std::vector<Corner> out;
    for (const auto& [v, os] : outs) {
      const Vec3& p = verts_[v];
      for (int o : os) {
        Vec3 d = direction(p, verts_[arcs[o].to]);
        Corner c;
        c.v = v;
        c.out = o;
        c.angle = 10;
        for (int in : ins[v]) {
          double a = ccw_angle(p, d, direction(p, verts_[arcs[in].from]));
          if (a < opt_.eps) a = 2 * pi;
          if (a < c.angle) {
            c.angle = a;
            c.in = in;
          }
        }
        out.push_back(c);
      }
    }
    return out;
  }

  // Every corner must be fillable and every straight boundary run between two
  // convex corners must be a sum of tile edges.
  bool plausible(const std::vector<Arc>& arcs, const std::vector<Corner>& cs) const {
    std::map<int, const Corner*> by_in;
    for (const auto& c : cs) {
      if (c.in < 0 || !contains_value(gaps_, c.angle)) return false;
      by_in[c.in] = &c;
    }
    std::map<int, const Corner*> by_out;
    for (const auto& c : cs) by_out[c.out] = &c;
    for (const auto& c : cs) {
      if (c.angle > pi - kMatch) continue;  // runs start at convex corners
      double len = 0;
      int arc = c.out;
      for (std::size_t steps = 0; steps <= arcs.size(); ++steps) {
        len += distance(verts_[arcs[arc].from], verts_[arcs[arc].to]);
        const Corner* next = by_in.at(arc);
        if (std::abs(next->angle - pi) < kMatch) {
          arc = next->out;
          continue;
        }
        if (next->angle < pi && !contains_value(lengths_, len)) return false;
        break;
      }
    }
    return true;
  }

  std::string signature(const std::vector<Arc>& arcs) const {
    std::vector<std::string> parts;
    auto r = [](double x) { return std::llround(x * 1e7); };
    for (const auto& a : arcs) {
      const Vec3& p = verts_[a.from];
      const Vec3& q = verts_[a.to];
      std::ostringstream os;
      os << r(p.x()) << ',' << r(p.y()) << ',' << r(p.z()) << '>' << r(q.x()) << ',' << r(q.y()) << ',' << r(q.z());
      parts.push_back(os.str());
    }
    std::sort(parts.begin(), parts.end());
    std::string s;
    for (const auto& p : parts) s += p + ';';
    return s;
  }

  // Tile (a, b, c) counter-clockwise must lie inside the region.
  bool fits(const std::vector<Arc>& arcs, const Vec3& a, const Vec3& b, const Vec3& c) const {
    const double eps = opt_.eps;
    const Vec3 tv[3] = {a, b, c};
    for (const auto& arc : arcs) {
      const Vec3& p = verts_[arc.from];
      const Vec3& q = verts_[arc.to];
      std::vector<double> cuts = {0.0, distance(p, q)};
      for (int e = 0; e < 3; ++e) {
        if (proper_crossing(p, q, tv[e], tv[(e + 1) % 3], eps)) return false;
        if (on_arc_interior(p, q, tv[e], eps)) cuts.push_back(distance(p, tv[e]));
      }
      std::sort(cuts.begin(), cuts.end());
      Vec3 u = direction(p, q);
      for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        if (cuts[i + 1] - cuts[i] < eps) continue;
        Vec3 mid = travel(p, u, 0.5 * (cuts[i] + cuts[i + 1]));
        if (strictly_inside(a, b, c, mid, eps)) return false;
      }
    }
    return true;
  }

  std::optional<std::vector<Arc>> subtract(const std::vector<Arc>& arcs, int a, int b, int c) const {
    std::vector<Arc> all = arcs;
    all.push_back({b, a});
    all.push_back({c, b});
    all.push_back({a, c});
    std::vector<int> used;
    for (const auto& x : all) {
      used.push_back(x.from);
      used.push_back(x.to);
    }
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    std::vector<Arc> split;
    for (const auto& x : all) {
      const Vec3& p = verts_[x.from];
      const Vec3& q = verts_[x.to];
      std::vector<std::pair<double, int>> on;
      for (int v : used)
        if (v != x.from && v != x.to && on_arc_interior(p, q, verts_[v], opt_.eps * 10))
          on.push_back({distance(p, verts_[v]), v});
      std::sort(on.begin(), on.end());
      int prev = x.from;
      for (const auto& [d, v] : on) {
        split.push_back({prev, v});
        prev = v;
      }
      split.push_back({prev, x.to});
    }
    std::map<std::pair<int, int>, int> count;
    for (const auto& x : split) {
      if (x.from == x.to) return std::nullopt;
      count[{x.from, x.to}]++;
    }
    std::vector<Arc> out;
    std::map<std::pair<int, int>, int> emitted;
    for (const auto& x : split) {
      int fwd = count[{x.from, x.to}], back = count.count({x.to, x.from}) ? count[{x.to, x.from}] : 0;
      if (fwd > 1 + back) return std::nullopt;  // doubled boundary: overlap
      int keep = fwd - std::min(fwd, back);
      if (emitted[{x.from, x.to}] < keep) {
        out.push_back(x);
        emitted[{x.from, x.to}]++;
      }
    }
    return out;
  }

  bool recurse(const std::vector<Arc>& arcs, int remaining) {
    if (arcs.empty()) return remaining == 0;
    if (remaining <= 0) return false;
    std::string sig = signature(arcs);
    if (failed_.count(sig)) return false;
    auto cs = corners(arcs);
    if (!plausible(arcs, cs)) {
      failed_.insert(sig);
      return false;
    }
    const Corner* best = nullptr;
    for (const auto& c : cs)
      if (!best || c.angle < best->angle - 1e-9) best = &c;
    const Corner corner = *best;
    const Vec3 V = verts_[corner.v];
    const Vec3 u = direction(V, verts_[arcs[corner.out].to]);
    for (const auto& o : orient_) {
      double rest = corner.angle - o.angle;
      if (rest < -kMatch) continue;
      if (rest > kMatch && !contains_value(gaps_, rest)) continue;
      if (++nodes_ > opt_.node_budget) throw Budget{};
      Vec3 P = travel(V, u, o.l1);
      Vec3 Q = travel(V, rotate_tangent(V, u, o.angle), o.l2);
      if (!fits(arcs, V, P, Q)) continue;
      std::size_t mark = verts_.size();
      int ip = vertex(P), iq = vertex(Q);
      auto next = subtract(arcs, corner.v, ip, iq);
      if (next) {
        placed_.push_back({corner.v, ip, iq});
        if (recurse(*next, remaining - 1)) return true;
        placed_.pop_back();
      }
      verts_.resize(mark);
    }
    failed_.insert(sig);
    return false;
  }

  const TileSpec& tile_;
  SearchOptions opt_;
  std::array<double, 3> ang_{}, edge_{};
  std::vector<double> gaps_, lengths_;
  double min_angle_ = 0;
  std::vector<Orientation> orient_;
  std::vector<Vec3> verts_;
  std::size_t target_size_ = 0;
  std::vector<std::array<int, 3>> placed_;
  std::unordered_set<std::string> failed_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

const char* status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::exhausted: return "exhausted";
    case SearchStatus::aborted: return "aborted";
  }
  return "?";
}

std::vector<Vec3> place_triangle(double tau, double phi, double psi) {
  auto e = edge_lengths({tau, phi, psi});  // e[1] = b opposite phi, e[2] = c opposite psi
  Vec3 A(0, 0, 1);
  Vec3 B = travel(A, Vec3(1, 0, 0), e[2]);
  Vec3 C = travel(A, Vec3(std::cos(tau), std::sin(tau), 0), e[1]);
  return {A, B, C};
}

std::vector<Vec3> place_lune(double phi) {
  return {Vec3(0, 0, 1), Vec3(1, 0, 0), Vec3(0, 0, -1), Vec3(std::cos(phi), std::sin(phi), 0)};
}

SearchResult search_tiling(const std::vector<Vec3>& target, const TileSpec& tile, const SearchOptions& opt) {
  Searcher s(tile, opt);
  return s.run(target);
}

SearchResult search_tiling(const std::array<Rational, 3>& t, const TileSpec& tile, const SearchOptions& opt) {
  std::array<double, 3> r{t[0].get_d() * pi, t[1].get_d() * pi, t[2].get_d() * pi};
  if (!is_valid(r)) throw std::invalid_argument("search_tiling: target is not a spherical triangle");
  return search_tiling(place_triangle(r[0], r[1], r[2]), tile, opt);
}

Verification verify_tiling(const SphTiling& t, const TileSpec& tile, double eps) {
  auto fail = [](std::string m) { return Verification{false, std::move(m)}; };
  auto e = tile.edges();
  std::array<double, 3> want = e;
  std::sort(want.begin(), want.end());
  const auto& V = t.vertices;
  auto vert = [&](int i) -> const Vec3& { return V.at(static_cast<std::size_t>(i)); };
  double area = 0;
  for (std::size_t n = 0; n < t.tiles.size(); ++n) {
    const auto& tr = t.tiles[n];
    std::array<double, 3> got{distance(vert(tr[1]), vert(tr[2])), distance(vert(tr[2]), vert(tr[0])),
                              distance(vert(tr[0]), vert(tr[1]))};
    std::sort(got.begin(), got.end());
    for (int i = 0; i < 3; ++i)
      if (std::abs(got[i] - want[i]) > eps) return fail("tile " + std::to_string(n) + " is not congruent to T0");
    area += std::abs(triangle_area(vert(tr[0]), vert(tr[1]), vert(tr[2])));
    const std::size_t m = t.target.size();
    for (int i = 0; i < 3; ++i)
      for (std::size_t k = 0; k < m; ++k)
        if (side(vert(t.target[k]), vert(t.target[(k + 1) % m]), vert(tr[i])) < -eps)
          return fail("tile " + std::to_string(n) + " leaves the target");
  }
  for (std::size_t i = 0; i < t.tiles.size(); ++i)
    for (std::size_t j = i + 1; j < t.tiles.size(); ++j) {
      const auto& A = t.tiles[i];
      const auto& B = t.tiles[j];
      auto ccw = [&](const std::array<int, 3>& x) {
        std::array<Vec3, 3> p{vert(x[0]), vert(x[1]), vert(x[2])};
        if (p[0].dot(p[1].cross(p[2])) < 0) std::swap(p[1], p[2]);
        return p;
      };
      auto a = ccw(A), b = ccw(B);
      std::string who = "tiles " + std::to_string(i) + " and " + std::to_string(j);
      for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
          if (proper_crossing(a[x], a[(x + 1) % 3], b[y], b[(y + 1) % 3], eps)) return fail(who + " cross");
      Vec3 ca = (a[0] + a[1] + a[2]).normalized(), cb = (b[0] + b[1] + b[2]).normalized();
      for (int x = 0; x < 3; ++x) {
        if (strictly_inside(a[0], a[1], a[2], b[x], eps) || strictly_inside(b[0], b[1], b[2], a[x], eps))
          return fail(who + " overlap");
      }
      if (strictly_inside(a[0], a[1], a[2], cb, eps) || strictly_inside(b[0], b[1], b[2], ca, eps))
        return fail(who + " overlap");
    }
  std::vector<Vec3> outline;
  for (int i : t.target) outline.push_back(vert(i));
  double target_area = polygon_area(outline);
  if (std::abs(area - target_area) > std::max<std::size_t>(1, t.tiles.size()) * eps)
    return fail("tile areas do not add up to the target area");
  return {true, "ok"};
}

std::string to_json(const SphTiling& t) {
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  for (const auto& v : t.vertices) j["vertices"].push_back({v.x(), v.y(), v.z()});
  j["target"] = t.target;
  j["tiles"] = t.tiles;
  return j.dump();
}

std::string to_svg(const SphTiling& t, const std::string& title) {
  // rotate the target's centre to the north pole, then project from the south pole
  Vec3 centre = Vec3::Zero();
  for (int i : t.target) centre += t.vertices[i];
  centre = centre.norm() > 1e-12 ? centre.normalized() : Vec3(0, 0, 1);
  const Eigen::Quaterniond rot = Eigen::Quaterniond::FromTwoVectors(centre, Vec3(0, 0, 1));
  auto project = [&](const Vec3& p0) {
    Vec3 p = rot * p0;
    return Eigen::Vector2d(p.x() / (1 + p.z()), -p.y() / (1 + p.z()));
  };
  auto arc_points = [&](const Vec3& p, const Vec3& q) {
    std::vector<Eigen::Vector2d> pts;
    double d = distance(p, q);
    Vec3 u = direction(p, q);
    for (int s = 0; s <= 64; ++s) pts.push_back(project(travel(p, u, d * s / 64.0)));
    return pts;
  };
  auto polygon = [&](const std::vector<Vec3>& poly) {
    std::vector<Eigen::Vector2d> pts;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      auto seg = arc_points(poly[i], poly[(i + 1) % poly.size()]);
      pts.insert(pts.end(), seg.begin(), seg.end() - 1);
    }
    return pts;
  };
  std::vector<std::vector<Eigen::Vector2d>> tiles;
  for (const auto& tr : t.tiles) tiles.push_back(polygon({t.vertices[tr[0]], t.vertices[tr[1]], t.vertices[tr[2]]}));
  std::vector<Vec3> outline;
  for (int i : t.target) outline.push_back(t.vertices[i]);
  auto border = polygon(outline);
  double lo_x = 1e9, lo_y = 1e9, hi_x = -1e9, hi_y = -1e9;
  for (const auto& p : border) {
    if (!std::isfinite(p.x()) || !std::isfinite(p.y()) || p.norm() > 50) continue;
    lo_x = std::min(lo_x, p.x());
    hi_x = std::max(hi_x, p.x());
    lo_y = std::min(lo_y, p.y());
    hi_y = std::max(hi_y, p.y());
  }
  double size = 480, pad = 10;
  double scale = (size - 2 * pad) / std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
  auto path = [&](const std::vector<Eigen::Vector2d>& pts) {
    std::ostringstream os;
    os.precision(6);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      double x = std::clamp(pad + (pts[i].x() - lo_x) * scale, -1e4, 1e4);
      double y = std::clamp(pad + (pts[i].y() - lo_y) * scale, -1e4, 1e4);
      os << (i ? " L " : "M ") << std::fixed << x << ' ' << y;
    }
    os << " Z";
    return os.str();
  };
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\" viewBox=\"0 0 "
      << size << ' ' << size << "\">\n";
  if (!title.empty()) svg << "  <title>" << title << "</title>\n";
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    int shade = 200 + static_cast<int>((i * 37) % 50);
    svg << "  <path d=\"" << path(tiles[i]) << "\" fill=\"rgb(" << shade << ',' << shade << ",255)\" stroke=\"black\" "
        << "stroke-width=\"1\"/>\n";
  }
  svg << "  <path d=\"" << path(border) << "\" fill=\"none\" stroke=\"black\" stroke-width=\"3\"/>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace reptile::realize
