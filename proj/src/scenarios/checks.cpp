#include "reptile/scenarios/checks.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>

#include "reptile/coxeter/enumerate.hpp"
#include "reptile/exact/sturm.hpp"
#include "reptile/spherical/triangle.hpp"

namespace reptile::scenarios {

using angles::AngleForm;
using angles::parse_angle;
using angles::RelationSet;
using angles::Symbol;
using coxeter::ColorGraph;
using coxeter::DiagramConstraints;
using exact::Poly;

namespace {

constexpr double pi = std::numbers::pi;

std::vector<TriangleType> parse_types(const std::vector<std::string>& texts, const RelationSet& r) {
  std::vector<TriangleType> out;
  for (const auto& s : texts) out.push_back(TriangleType::parse(s, r));
  return out;
}

std::array<double, 3> radians(const TriangleType& t, const RelationSet& r) {
  std::array<double, 3> v;
  for (int i = 0; i < 3; ++i) v[i] = r.constant(t.labels[i])->get_d() * pi;
  return v;
}

std::array<int, 3> sorted_colors(const ColorGraph& g, const coxeter::Subset& t) {
  std::array<int, 3> ty{g.color(t[0], t[1]), g.color(t[0], t[2]), g.color(t[1], t[2])};
  std::sort(ty.begin(), ty.end());
  return ty;
}

}  // namespace

RelationSet alpha_two_beta_relations() {
  RelationSet r;
  r.add(Symbol::alpha, "pi - 2*beta");
  r.add(Symbol::gamma, "pi/2");
  return r;
}

std::vector<CoxeterDiagram> alpha_two_beta_diagrams() {
  auto r = alpha_two_beta_relations();
  std::vector<AngleForm> alphabet;
  for (const char* s : {"alpha", "beta", "gamma", "2*beta", "alpha+beta"}) alphabet.push_back(parse_angle(s));
  auto t0 = TriangleType::parse("(alpha,beta,gamma)", r);
  DiagramConstraints c;
  c.rules.push_back({parse_angle("alpha"),
                     {t0, TriangleType::parse("(alpha,alpha,2*beta)", r), TriangleType::parse("(alpha,alpha+beta,gamma)", r)}});
  c.rich_in = t0;
  return coxeter::enumerate_diagrams(5, alphabet, c, r);
}

std::vector<CoxeterDiagram> valid_diagrams(const std::vector<CoxeterDiagram>& ds, int samples) {
  std::vector<CoxeterDiagram> out;
  for (const auto& d : ds) {
    std::set<TriangleType> types;
    for (const auto& t : d.triangles()) types.insert(d.triangle_type(t[0], t[1], t[2]));
    bool ok = true;
    for (int k = 1; k <= samples && ok; ++k) {
      double beta = pi / 3 + (pi / 6) * k / (samples + 1);
      angles::AngleAssignment at{pi - 2 * beta, beta, pi / 2};
      for (const auto& t : types)
        if (!spherical::is_valid(t.labels, d.relations(), at)) {
          ok = false;
          break;
        }
    }
    if (ok) out.push_back(d);
  }
  return out;
}

std::vector<Poly> alpha_two_beta_factored_dets() {
  const Poly t = Poly::variable();
  const Poly two_t_m1 = Poly(2) * t - Poly(1);
  return {
      -(t * t * two_t_m1 * (Poly(2) * t * t - t - Poly(2)) * (Poly(4) * t * t * t + Poly(4) * t * t - t - Poly(2))),
      -(t * t * two_t_m1 * (Poly(2) * t * t + t - Poly(2)) *
        (Poly(4) * t * t * t + Poly(2) * t * t - Poly(3) * t - Poly(2))),
      -(exact::pow(t, 4) * two_t_m1 * (Poly(2) * t + Poly(1)) * (Poly(4) * t * t - Poly(3))),
      -(Poly(8) * exact::pow(t, 4) * (Poly(2) * t * t - Poly(1)) * (Poly(4) * exact::pow(t, 4) - Poly(7) * t * t + Poly(2))),
  };
}

std::vector<double> rounded_roots(const Poly& p) {
  std::vector<double> out;
  for (const auto& r : exact::isolate_roots(p, Rational(1, 100000))) {
    double x = std::round(r.midpoint().get_d() * 100) / 100;
    out.push_back(x == 0 ? 0.0 : x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::array<int, 4>> derive_edge_counts(const std::array<int, 3>& t1, const std::array<int, 3>& t2) {
  int k = 1 + std::max(*std::max_element(t1.begin(), t1.end()), *std::max_element(t2.begin(), t2.end()));
  const auto tris = coxeter::all_subsets(5, 3);
  std::set<std::array<int, 4>> counts;
  coxeter::for_each_coloring(5, k, {}, [&](const ColorGraph& g) {
    int c1 = 0, c2 = 0;
    std::vector<bool> covered(10, false);
    for (const auto& t : tris) {
      auto ty = sorted_colors(g, t);
      bool a = ty == t1, b = ty == t2;
      c1 += a;
      c2 += b;
      if (a || b)
        covered[coxeter::edge_index(t[0], t[1])] = covered[coxeter::edge_index(t[0], t[2])] =
            covered[coxeter::edge_index(t[1], t[2])] = true;
    }
    if (c1 < 4 || c2 < 4) return;
    if (std::find(covered.begin(), covered.end(), false) != covered.end()) return;
    std::array<int, 4> cnt{0, 0, 0, 0};
    for (int c : g.colors) ++cnt[c];
    counts.insert(cnt);
  });
  return {counts.begin(), counts.end()};
}

std::vector<TileLists> load_tile_lists(const std::filesystem::path& fixture_dir) {
  auto path = fixture_dir / "realizable_lists.json";
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  auto j = nlohmann::json::parse(in);
  std::vector<TileLists> out;
  for (const auto& e : j.at("tiles")) {
    TileLists l;
    l.name = e.at("name").get<std::string>();
    l.tile = realize::TileSpec::parse(e.at("tile").get<std::string>());
    l.relations = coxeter::relations_from_json(e.at("relations"));
    l.alpha_list = e.at("alpha").get<std::vector<std::string>>();
    l.beta_list = e.at("beta").get<std::vector<std::string>>();
    l.excluded = e.at("excluded").get<std::vector<std::string>>();
    out.push_back(std::move(l));
  }
  return out;
}

std::array<Rational, 3> angle_triple(const TriangleType& t, const RelationSet& r) {
  std::array<Rational, 3> a;
  for (int i = 0; i < 3; ++i) {
    auto c = r.constant(t.labels[i]);
    if (!c) throw std::invalid_argument("label is not constant: " + t.labels[i].to_string());
    a[i] = *c;
  }
  std::sort(a.begin(), a.end());
  return a;
}

std::array<Rational, 3> angle_triple(const std::string& text, const RelationSet& r) {
  return angle_triple(TriangleType::parse(text, r), r);
}

std::vector<RealizedCandidate> realize_candidates(const realize::TileSpec& tile, const Rational& tau,
                                                  const Rational& phi_min, std::uint64_t node_budget,
                                                  const std::string& tau_name) {
  std::vector<RealizedCandidate> out;
  for (const auto& c : realize::enumerate_candidates(tile, tau, phi_min)) {
    RealizedCandidate rc;
    rc.candidate = c;
    rc.name = "(" + tau_name + ", " + c.small.to_string() + ", " + c.large.to_string() + ")";
    rc.message = c.to_string(tau_name);
    if (c.expressible()) {
      realize::SearchOptions o;
      o.n_max = c.n;
      o.node_budget = node_budget;
      rc.search = realize::search_tiling(c.type(), tile, o);
      if (rc.search.tiling) {
        auto v = realize::verify_tiling(*rc.search.tiling, tile);
        rc.verified = v.ok;
        if (!v.ok) rc.message = v.message;
      }
    }
    out.push_back(std::move(rc));
  }
  return out;
}

PairOrbitSurvey survey_pair_orbits(int n) {
  PairOrbitSurvey s;
  // every subgroup of S_n for n <= 5 is generated by two elements
  std::set<std::set<coxeter::Perm>> groups;
  auto perms = coxeter::all_permutations(n);
  for (std::size_t i = 0; i < perms.size(); ++i)
    for (std::size_t j = i; j < perms.size(); ++j) {
      auto g = coxeter::generate_group(n, {perms[i], perms[j]});
      groups.insert({g.elements.begin(), g.elements.end()});
    }
  s.subgroups = groups.size();
  s.bound = coxeter::pair_orbit_bound(n);
  const auto pairs = coxeter::all_subsets(n, 2);
  for (const auto& e : groups) {
    coxeter::AutGroup g{n, {e.begin(), e.end()}};
    if (g.is_trivial()) continue;
    auto c = coxeter::burnside_count(g, pairs);
    s.worst = std::max(s.worst, c);
    if (c != s.bound) continue;
    ++s.at_bound;
    int moved = 0;
    for (const auto& p : g.elements)
      if (!coxeter::is_identity(p))
        for (int k = 0; k < n; ++k) moved += p[k] != k;
    s.at_bound_transpositions += g.order() == 2 && moved == 2;
  }
  return s;
}

std::string triple_to_string(const std::array<Rational, 3>& a) {
  std::string s = "(";
  for (int i = 0; i < 3; ++i) {
    if (i) s += ",";
    s += angles::AngleForm::pi_times(a[i]).to_string();
  }
  return s + ")";
}

std::vector<CoxeterDiagram> single_alpha_pair_diagrams() {
  auto t0 = TriangleType::parse("(alpha,beta,gamma)");
  DiagramConstraints c;
  c.rules.push_back({parse_angle("alpha"), {t0}});
  c.shapes.push_back({parse_angle("alpha"), {"P2+P2"}});
  return coxeter::enumerate_diagrams(5, {parse_angle("alpha"), parse_angle("beta"), parse_angle("gamma")}, c);
}

std::vector<CoxeterDiagram> rich_diagrams(const TileLists& lists, bool generic_filter, double tol, int coeff_bound) {
  const auto& r = lists.relations;
  auto t0 = TriangleType::parse("(alpha,beta,gamma)", r);
  std::vector<TriangleType> a{t0}, b{t0};
  std::set<AngleForm> alphabet(t0.labels.begin(), t0.labels.end());
  const auto beta = r.normalize(parse_angle("beta"));
  for (const auto& t : parse_types(lists.alpha_list, r)) {
    a.push_back(t);
    if (t.contains(beta)) b.push_back(t);
    alphabet.insert(t.labels.begin(), t.labels.end());
  }
  for (const auto& t : parse_types(lists.beta_list, r)) {
    b.push_back(t);
    alphabet.insert(t.labels.begin(), t.labels.end());
  }
  DiagramConstraints c;
  c.rules.push_back({parse_angle("alpha"), a});
  c.rules.push_back({parse_angle("beta"), b});
  c.rich_in = t0;
  auto tile = lists.tile;
  tile.coeff_bound = coeff_bound;
  tile.tol = tol;
  const auto edges = tile.edges();
  if (generic_filter) {
    c.triangle_ok = [r, tile, edges](const TriangleType& t) {
      auto v = radians(t, r);
      if (!spherical::is_valid(v)) return false;
      auto q = angle_triple(t, r);
      Rational ratio = (q[0] + q[1] + q[2] - 1) / tile.area();
      if (ratio.get_den() != 1) return false;
      for (double x : spherical::edge_lengths(v))
        if (!realize::edge_combination(x, edges, tile.coeff_bound, tile.tol).matched) return false;
      return true;
    };
  } else {
    c.forbidden = parse_types(lists.excluded, r);
    c.triangle_ok = [r](const TriangleType& t) { return static_cast<bool>(spherical::is_valid(radians(t, r))); };
  }
  return coxeter::enumerate_diagrams(5, {alphabet.begin(), alphabet.end()}, c, r);
}

std::map<std::vector<int>, std::pair<std::string, std::string>> alpha_beta_shapes() {
  // colors: 0 alpha, 1 beta, 2 gamma, 3 other (made pairwise distinct at the leaf)
  const auto tris = coxeter::all_subsets(5, 3);
  const std::array<int, 3> t0{0, 1, 2};
  std::map<std::vector<int>, std::pair<std::string, std::string>> out;
  auto edges_of = [](const std::vector<int>& colors, int c) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < static_cast<int>(colors.size()); ++i)
      if (colors[i] == c) e.push_back(coxeter::edge_ends(i));
    return e;
  };
  coxeter::for_each_coloring(
      5, 4,
      [&](const std::vector<int>& c, int e) {
        // alpha < pi/3 = beta: a triangle with only alpha- and beta-edges has no positive area
        for (const auto& t : tris) {
          int x = coxeter::edge_index(t[0], t[1]), y = coxeter::edge_index(t[0], t[2]),
              z = coxeter::edge_index(t[1], t[2]);
          if (std::max({x, y, z}) != e) continue;
          if (c[x] < 2 && c[y] < 2 && c[z] < 2) return false;
        }
        return true;
      },
      [&](const ColorGraph& g) {
        auto sa = coxeter::classify_graph(5, edges_of(g.colors, 0));
        if (sa != "P2+P2" && sa != "P2+P3") return;
        ColorGraph h = g;
        for (int e = 0; e < 10; ++e)
          if (h.colors[e] == 3) h.colors[e] = 3 + e;
        std::vector<coxeter::Subset> copies;
        for (const auto& t : tris)
          if (sorted_colors(h, t) == t0) copies.push_back(t);
        if (copies.size() < 4) return;
        if (coxeter::orbit_partition(coxeter::automorphisms(h), copies).size() < 4) return;
        ColorGraph p = g;
        for (auto& x : p.colors) x = std::min(x, 2);
        out[coxeter::canonical_form(p)] = {sa, coxeter::classify_graph(5, edges_of(p.colors, 1))};
      });
  return out;
}

std::map<std::vector<int>, std::pair<std::string, std::string>> alpha_beta_shapes_fixture(
    const std::filesystem::path& fixture_dir) {
  auto path = fixture_dir / "diagrams" / "alpha_beta_subgraphs.json";
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  auto j = nlohmann::json::parse(in);
  auto names = j.at("vertices").get<std::vector<std::string>>();
  auto vertex = [&](char ch) {
    auto it = std::find(names.begin(), names.end(), std::string(1, ch));
    if (it == names.end()) throw std::runtime_error(std::string("unknown vertex ") + ch);
    return static_cast<int>(it - names.begin());
  };
  std::map<std::vector<int>, std::pair<std::string, std::string>> out;
  for (const auto& [key, s] : j.at("subgraphs").items()) {
    ColorGraph g(5, std::vector<int>(10, 2));
    std::vector<std::pair<int, int>> ea, eb;
    for (const auto& e : s.at("alpha")) {
      auto t = e.get<std::string>();
      g.colors[coxeter::edge_index(vertex(t[0]), vertex(t[1]))] = 0;
      ea.emplace_back(vertex(t[0]), vertex(t[1]));
    }
    for (const auto& e : s.at("beta")) {
      auto t = e.get<std::string>();
      g.colors[coxeter::edge_index(vertex(t[0]), vertex(t[1]))] = 1;
      eb.emplace_back(vertex(t[0]), vertex(t[1]));
    }
    out[coxeter::canonical_form(g)] = {coxeter::classify_graph(5, ea), coxeter::classify_graph(5, eb)};
  }
  return out;
}

CoxeterDiagram forced_alpha_alpha_beta_diagram() {
  RelationSet r;
  r.add(Symbol::alpha, "pi/3");
  r.add(Symbol::beta, "pi/2");
  enum { u, v, w, x, y };
  std::vector<AngleForm> labels(10, AngleForm::alpha());
  labels[coxeter::edge_index(u, v)] = labels[coxeter::edge_index(x, y)] = AngleForm::beta();
  labels[coxeter::edge_index(x, w)] = labels[coxeter::edge_index(y, w)] = parse_angle("2*alpha");
  CoxeterDiagram d(5, labels, r);
  d.set_names({"u", "v", "w", "x", "y"});
  return d;
}

std::vector<CoxeterDiagram> alpha_alpha_beta_diagrams(const TileLists& lists) {
  const auto& r = lists.relations;
  auto t0 = TriangleType::parse("(alpha,alpha,beta)", r);
  std::vector<TriangleType> a{t0}, b{t0};
  std::set<AngleForm> alphabet(t0.labels.begin(), t0.labels.end());
  const auto beta = r.normalize(parse_angle("beta"));
  for (const auto& t : parse_types(lists.alpha_list, r)) {
    a.push_back(t);
    if (t.contains(beta)) b.push_back(t);
    alphabet.insert(t.labels.begin(), t.labels.end());
  }
  for (const auto& t : parse_types(lists.beta_list, r)) {
    b.push_back(t);
    alphabet.insert(t.labels.begin(), t.labels.end());
  }
  // gamma is left free: gamma and 2 gamma play two further distinct angles
  alphabet.insert(parse_angle("gamma"));
  alphabet.insert(parse_angle("2*gamma"));
  DiagramConstraints c;
  c.rules.push_back({r.normalize(parse_angle("alpha")), a});
  c.rules.push_back({beta, b});
  c.rich_in = t0;
  return coxeter::enumerate_diagrams(5, {alphabet.begin(), alphabet.end()}, c, r);
}

}  // namespace reptile::scenarios
