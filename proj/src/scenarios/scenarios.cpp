#include "reptile/scenarios/scenarios.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <future>
#include <iomanip>
#include <numbers>
#include <optional>
#include <set>
#include <sstream>
#include <tuple>

#include "reptile/coxeter/enumerate.hpp"
#include "reptile/gram/gram.hpp"
#include "reptile/hill/hill.hpp"
#include "reptile/scenarios/checks.hpp"
#include "reptile/spherical/triangle.hpp"

#ifndef REPTILE_FIXTURE_DIR
#define REPTILE_FIXTURE_DIR "fixtures"
#endif

namespace reptile::scenarios {

using angles::AngleForm;
using angles::parse_angle;
using coxeter::automorphisms;
using exact::Poly;
using exact::QuadExt;

namespace {

constexpr double pi = std::numbers::pi;

using Clock = std::chrono::steady_clock;

class Recorder {
 public:
  Recorder(Report& r, const AnchorTable& anchors) : r_(r), anchors_(anchors), last_(Clock::now()) {}

  void check(const std::string& id, const std::string& description, const std::string& expected,
             const std::string& actual, bool pass) {
    auto now = Clock::now();
    Checkpoint c;
    c.id = id;
    c.description = description;
    c.expected = expected;
    c.actual = actual;
    c.pass = pass;
    c.anchor = anchors_.at(id);
    c.ms = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
    r_.checkpoints.push_back(std::move(c));
  }
  void equal(const std::string& id, const std::string& description, const std::string& expected,
             const std::string& actual) {
    check(id, description, expected, actual, expected == actual);
  }
  void figure(const std::string& name, const std::string& title, const realize::SphTiling& t) {
    r_.figures.push_back({name, title, t});
  }

 private:
  Report& r_;
  const AnchorTable& anchors_;
  Clock::time_point last_;
};

std::string join(const std::vector<std::string>& v, const std::string& sep = ", ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

std::string fixed(double x, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << (std::abs(x) < 0.5 * std::pow(10.0, -digits) ? 0.0 : x);
  return os.str();
}

template <class T>
std::string str(const T& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// file-name friendly version of a triangle name
std::string slug(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (std::isalnum(static_cast<unsigned char>(c)))
      out += c;
    else if (!out.empty() && out.back() != '_')
      out += '_';
  }
  while (!out.empty() && out.back() == '_') out.pop_back();
  return out;
}

coxeter::CoxeterDiagram fixture(const Config& c, const std::string& name) {
  return coxeter::load_diagram((c.fixture_dir / "diagrams" / (name + ".json")).string());
}

std::string roots_string(const std::vector<double>& roots) {
  std::vector<std::string> v;
  for (double x : roots) v.push_back(fixed(x, 2));
  return "{" + join(v) + "}";
}

bool is_dihedral_of_order_8(const coxeter::AutGroup& g) {
  if (g.order() != 8) return false;
  // D4: nonabelian with an element of order 4
  bool abelian = true, order4 = false;
  for (const auto& a : g.elements) {
    for (const auto& b : g.elements)
      if (coxeter::compose(a, b) != coxeter::compose(b, a)) abelian = false;
    auto a2 = coxeter::compose(a, a);
    if (!coxeter::is_identity(a2) && coxeter::is_identity(coxeter::compose(a2, a2))) order4 = true;
  }
  return !abelian && order4;
}

void three_dim(Recorder& rec, const Config& cfg) {
  using coxeter::ColorGraph;
  // two labels, three edges each: classes of K4 colorings up to relabeling
  std::set<std::vector<int>> classes;
  coxeter::for_each_coloring(4, 2, {}, [&](const ColorGraph& g) {
    if (std::count(g.colors.begin(), g.colors.end(), 0) == 3) classes.insert(coxeter::canonical_partition(g));
  });
  std::set<std::vector<int>> from_fixtures;
  for (const char* n : {"3d_two_angles_path", "3d_two_angles_triangle_star"})
    from_fixtures.insert(coxeter::canonical_partition(fixture(cfg, n).colors()));
  rec.check("3d.two_angles.classes", "placements of two dihedral angles, three edges each", "2 (the two fixtures)",
            str(classes.size()) + (classes == from_fixtures ? " (the two fixtures)" : " (differ from fixtures)"),
            classes.size() == 2 && classes == from_fixtures);

  for (const auto& [id, name] : std::vector<std::pair<std::string, std::string>>{
           {"3d.two_angles.path", "3d_two_angles_path"}, {"3d.two_angles.star", "3d_two_angles_triangle_star"}}) {
    auto d = fixture(cfg, name);
    std::vector<std::string> per_label;
    bool all = true;
    for (const auto& f : d.alphabet()) {
      auto orbs = coxeter::edge_orbits(d, f);
      bool swapped = std::any_of(orbs.begin(), orbs.end(), [](const auto& o) { return o.size() > 1; });
      all = all && swapped;
      per_label.push_back(f.to_string() + ": " + yes_no(swapped));
    }
    rec.check(id, "some symmetry swaps two edges of each label", "every label", join(per_label), all);
  }

  auto path = fixture(cfg, "3d_alpha_path");
  auto porb = coxeter::edge_orbits(path, AngleForm::alpha());
  auto pg = automorphisms(path);
  rec.check("3d.alpha_path", "alpha-edges on a path: an involution swaps two alpha-edges",
            "|G| = 2, alpha-edge orbits 2",
            "|G| = " + str(pg.order()) + ", alpha-edge orbits " + str(porb.size()),
            pg.order() == 2 && porb.size() == 2);

  auto cyc = fixture(cfg, "3d_alpha_cycle");
  auto cg = automorphisms(cyc);
  auto corb = coxeter::edge_orbits(cyc, AngleForm::alpha());
  rec.check("3d.alpha_cycle", "alpha-edges on a four-cycle: D4 acting transitively on alpha-edges",
            "|G| = 8 (D4), alpha-edge orbits 1",
            "|G| = " + str(cg.order()) + (is_dihedral_of_order_8(cg) ? " (D4)" : "") + ", alpha-edge orbits " +
                str(corb.size()),
            is_dihedral_of_order_8(cg) && corb.size() == 1);
}

void two_indivisible(Recorder& rec, const Config& cfg) {
  coxeter::PartitionConstraints pc;
  pc.min_types = 2;
  pc.min_copies = 4;
  pc.trivial_automorphisms = true;
  coxeter::EnumerationStats st;
  auto parts = coxeter::enumerate_edge_partitions(5, pc, &st);
  rec.check("two_ind.partitions", "K5 edge partitions with two triangle types >= 4 times and trivial symmetry",
            "none", str(parts.size()) + " of " + str(st.leaves) + " partitions", parts.empty());

  auto survey = survey_pair_orbits(5);
  rec.check("two_ind.pair_orbits", "nontrivial subgroups of S5: most orbits on pairs",
            "<= 7, equality only for single transpositions",
            "max " + str(survey.worst) + " over " + str(survey.subgroups - 1) + " subgroups; " +
                str(survey.at_bound) + " reach it, " + str(survey.at_bound_transpositions) + " of them transpositions",
            survey.worst == 7 && survey.bound == 7 && survey.at_bound > 0 &&
                survey.at_bound == survey.at_bound_transpositions);

  // colors: alpha 0, beta 1, gamma 2, delta 3
  struct Row {
    std::array<int, 3> t1, t2;
    std::array<int, 4> counts;
  };
  const std::vector<Row> table = {
      {{0, 0, 1}, {0, 2, 3}, {4, 2, 2, 2}}, {{0, 0, 0}, {0, 1, 2}, {6, 2, 2, 0}}, {{0, 0, 1}, {0, 0, 2}, {6, 2, 2, 0}},
      {{0, 0, 1}, {0, 2, 2}, {4, 2, 4, 0}}, {{0, 0, 1}, {0, 1, 2}, {4, 4, 2, 0}},
  };
  auto counts_str = [](const std::array<int, 4>& c) {
    return str(c[0]) + "," + str(c[1]) + "," + str(c[2]) + "," + str(c[3]);
  };
  for (std::size_t i = 0; i < table.size(); ++i) {
    auto got = derive_edge_counts(table[i].t1, table[i].t2);
    std::vector<std::string> v;
    for (const auto& c : got) v.push_back(counts_str(c));
    rec.equal("two_ind.table." + str(i + 1), "edge counts forced by the two triangle types (alpha,beta,gamma,delta)",
              counts_str(table[i].counts), join(v, " | "));
  }

  struct Fig {
    std::string key;
    std::size_t order;
    std::string t1, t2;
    std::size_t c1, c2;
  };
  const std::vector<Fig> figs = {
      {"a", 4, "(alpha,alpha,beta)", "(alpha,gamma,pi/2)", 4, 4},
      {"b", 4, "(alpha,alpha,alpha)", "(alpha,beta,gamma)", 4, 4},
      {"c", 4, "(alpha,alpha,beta)", "(alpha,alpha,gamma)", 5, 4},
      {"d", 8, "(alpha,alpha,beta)", "(alpha,gamma,gamma)", 4, 4},
      {"e", 4, "(alpha,alpha,beta)", "(alpha,beta,gamma)", 4, 4},
      {"f", 2, "(alpha,alpha,beta)", "(alpha,beta,gamma)", 4, 4},
  };
  for (const auto& f : figs) {
    auto d = fixture(cfg, "two_indivisible_" + f.key);
    auto g = automorphisms(d);
    auto n1 = d.count(coxeter::TriangleType::parse(f.t1)), n2 = d.count(coxeter::TriangleType::parse(f.t2));
    std::string expected = "|G| = " + str(f.order) + (f.order == 8 ? " (D4)" : "") + "; " + str(f.c1) + " x " + f.t1 +
                           ", " + str(f.c2) + " x " + f.t2;
    std::string actual = "|G| = " + str(g.order()) + (is_dihedral_of_order_8(g) ? " (D4)" : "") + "; " + str(n1) +
                         " x " + f.t1 + ", " + str(n2) + " x " + f.t2;
    rec.equal("two_ind.fig_" + f.key, "symmetry group and triangle counts of the diagram", expected, actual);
  }
}

void case_a(Recorder& rec, const Config& cfg) {
  auto ds = alpha_two_beta_diagrams();
  const std::vector<std::string> names = {"case_a_a", "case_a_b", "case_a_c", "case_a_d", "case_a_e"};
  std::set<std::vector<int>> want;
  for (const auto& n : names) want.insert(coxeter::canonical_form(fixture(cfg, n)));
  std::set<std::vector<int>> got;
  for (const auto& d : ds) got.insert(coxeter::canonical_form(d));
  rec.check("case_a.diagrams", "rich diagrams with alpha + 2 beta = pi, gamma = pi/2", "5 (fixtures a-e)",
            str(ds.size()) + (got == want ? " (fixtures a-e)" : " (differ from fixtures)"),
            ds.size() == 5 && got == want);

  auto valid = valid_diagrams(ds);
  std::set<std::vector<int>> valid_forms;
  for (const auto& d : valid) valid_forms.insert(coxeter::canonical_form(d));
  bool e_removed = !valid_forms.count(coxeter::canonical_form(fixture(cfg, "case_a_e")));
  auto e = fixture(cfg, "case_a_e");
  auto bad = coxeter::TriangleType::parse("(beta, alpha + beta, 2*beta)", e.relations());
  auto why = spherical::is_valid(bad.labels, e.relations(), angles::AngleAssignment{pi / 5, 2 * pi / 5, pi / 2});
  rec.check("case_a.exclusion", "diagrams left after removing invalid triangle types", "4 (diagram e removed)",
            str(valid.size()) + (e_removed ? " (diagram e removed: " : " (") + bad.to_string() + " " +
                spherical::reason_name(why.reason) + ")",
            valid.size() == 4 && e_removed && !why.valid);

  const auto factored = alpha_two_beta_factored_dets();
  const std::vector<std::vector<double>> gamma_roots = {
      {-0.78, 0, 0.5, 0.63, 1.28},
      {-1.28, 0, 0.5, 0.78, 0.92},
      {-0.87, -0.5, 0, 0.5, 0.87},
      {-1.18, -0.71, -0.6, 0, 0.6, 0.71, 1.18},
  };
  std::vector<Poly> enumerated;
  for (const auto& d : valid) enumerated.push_back(std::get<Poly>(gram::gram_from_diagram(d).exact->det()));
  for (int i = 0; i < 4; ++i) {
    std::string tag = std::string(1, static_cast<char>('a' + i));
    auto g = gram::gram_from_diagram(fixture(cfg, names[i]));
    auto det = std::get<Poly>(g.exact->det());
    rec.check("case_a.det." + tag, "expanded Gram determinant equals the factored form", factored[i].to_string(),
              det.to_string(), det == factored[i]);
    rec.equal("case_a.roots." + tag, "real roots of the determinant, two decimals", roots_string(gamma_roots[i]),
              roots_string(rounded_roots(det)));
    auto pr = gram::parametric_fiedler(g, Rational(0), Rational(1, 2));
    rec.check("case_a.interval." + tag, "roots with t = cos(beta) in (0, 1/2)", "0", str(pr.roots_in_interval),
              pr.roots_in_interval == 0);
  }
  std::multiset<std::string> a, b;
  for (const auto& p : enumerated) a.insert(p.to_string());
  for (const auto& p : factored) b.insert(p.to_string());
  rec.check("case_a.det.enumerated", "the enumerated diagrams give the same four determinants",
            "4 determinants, all factored forms", str(enumerated.size()) + (a == b ? " determinants, all factored forms" : " determinants, mismatch"),
            a == b);

  auto d = fixture(cfg, "case_a_d");
  auto t0 = coxeter::TriangleType::parse("(alpha,beta,gamma)", d.relations());
  auto orbs = coxeter::triangle_orbits(d, t0).size();
  rec.check("case_a.orbits_d", "(alpha,beta,gamma)-orbits in diagram d", "4", str(orbs), orbs == 4);
}

std::set<std::array<Rational, 3>> listed(const std::vector<std::string>& texts, const angles::RelationSet& r,
                                         const Rational& tau, const Rational& phi_min) {
  // keep the listed triangles that the candidate search for (tau, phi > phi_min) can produce
  std::set<std::array<Rational, 3>> out;
  for (const auto& s : texts) {
    auto t = angle_triple(s, r);
    auto it = std::find(t.begin(), t.end(), tau);
    if (it == t.end()) continue;
    std::vector<Rational> rest;
    for (auto j = t.begin(); j != t.end(); ++j)
      if (j != it) rest.push_back(*j);
    if (rest[0] > phi_min && rest[1] > phi_min) out.insert(t);
  }
  return out;
}

std::string triples(const std::set<std::array<Rational, 3>>& s) {
  std::vector<std::string> v;
  for (const auto& t : s) v.push_back(triple_to_string(t));
  return "{" + join(v) + "}";
}

struct ListOutcome {
  std::set<std::array<Rational, 3>> realized;
  std::vector<const RealizedCandidate*> unrealized;  // expressible, not tiled
  int max_n = 0;
};

ListOutcome summarize(const std::vector<RealizedCandidate>& cs) {
  ListOutcome o;
  for (const auto& c : cs) {
    if (!c.candidate.expressible()) continue;
    if (c.realized()) {
      o.realized.insert(c.candidate.type());
      o.max_n = std::max(o.max_n, c.candidate.n);
    } else {
      o.unrealized.push_back(&c);
    }
  }
  return o;
}

// Names an angle triple by small combinations i*alpha + j*beta, for tiles
// whose own angle names differ from the ones in the argument.
std::string combo_name(const std::array<Rational, 3>& t, const Rational& alpha, const Rational& beta) {
  std::vector<std::string> parts;
  for (const auto& x : t) {
    std::string best = exact::to_string(x) + "pi";
    for (int k = 1, done = 0; k <= 4 && !done; ++k)
      for (int i = k; i >= 0 && !done; --i)
        if (i * alpha + (k - i) * beta == x) {
          auto term = [](int c, const char* n) { return c == 0 ? std::string() : (c == 1 ? "" : str(c) + "*") + n; };
          std::string a = term(i, "alpha"), b = term(k - i, "beta");
          best = a.empty() ? b : (b.empty() ? a : a + "+" + b);
          done = 1;
        }
    parts.push_back(best);
  }
  return "(" + join(parts, ", ") + ")";
}

void add_figures(Recorder& rec, const std::string& prefix, const std::vector<RealizedCandidate>& cs,
                 std::optional<std::pair<Rational, Rational>> rename = {}) {
  for (const auto& c : cs)
    if (c.realized()) {
      std::string name = rename ? combo_name(c.candidate.type(), rename->first, rename->second) : c.name;
      rec.figure(prefix + "_" + slug(name), name + ", " + str(c.search.tiling->tiles.size()) + " tiles",
                 *c.search.tiling);
    }
}

TileLists find_lists(const std::vector<TileLists>& all, const std::string& name, const Config& cfg) {
  for (auto l : all)
    if (l.name == name) {
      l.tile.coeff_bound = cfg.coeff_bound;
      l.tile.tol = cfg.tol;
      return l;
    }
  throw std::runtime_error("realizable_lists.json has no entry " + name);
}

void case_b(Recorder& rec, const Config& cfg) {
  // T0 = (alpha, alpha, beta): m1 alpha + m2 beta = pi with 2 alpha + beta > pi
  std::vector<std::string> betas;
  for (int m = 1; m <= 100; ++m) {
    Rational b(1, m);
    if (3 * b > 1 && b < 1) betas.push_back(AngleForm::pi_times(b).to_string());
  }
  std::vector<std::string> alphas;
  for (int m1 = 1; m1 <= 100; ++m1)
    for (int m2 = 0; m2 <= 2; ++m2) {
      Rational a = (1 - exact::make_rational(m2, 2)) / m1;
      if (a > Rational(1, 4) && a < Rational(1, 2)) alphas.push_back(AngleForm::pi_times(a).to_string());
    }
  rec.equal("case_b.angles", "beta = pi/m2 with 3 beta > pi, then alpha from m1 alpha + m2 pi/2 = pi",
            "beta = 1/2*pi; alpha = 1/3*pi", "beta = " + join(betas, " or ") + "; alpha = " + join(alphas, " or "));

  // alpha + beta = pi: T0 has area alpha, the alpha-lune 2 alpha, so no (alpha**) triangle holds two tiles
  double worst = -1e9;
  for (int i = 1; i < 60; ++i)
    for (int j = 1; j < 60; ++j)
      for (int k = j; k < 60; ++k) {
        std::array<double, 3> t{pi * i / 60, pi * j / 60, pi * k / 60};
        if (!spherical::is_valid(t)) continue;
        worst = std::max(worst, spherical::area(t) - 2 * t[0]);
      }
  rec.check("case_b.lune", "area of an (alpha, phi, psi) triangle minus 2 alpha over a grid", "< 0",
            fixed(worst, 4), worst < 0);

  auto lists = find_lists(load_tile_lists(cfg.fixture_dir), "aab", cfg);
  const Rational third(1, 3), half(1, 2);
  auto alpha = realize_candidates(lists.tile, third, Rational(0), cfg.node_budget, "alpha");
  auto ao = summarize(alpha);
  auto want_a = listed(lists.alpha_list, lists.relations, third, Rational(0));
  rec.check("case_b.alpha_list", "realizable (alpha**) triangles other than T0", triples(want_a),
            triples(ao.realized) + (ao.unrealized.empty() ? "" : ", " + str(ao.unrealized.size()) + " unrealized"),
            ao.realized == want_a && ao.unrealized.empty());

  auto beta = realize_candidates(lists.tile, half, third, cfg.node_budget, "beta");
  auto bo = summarize(beta);
  auto want_b = listed(lists.beta_list, lists.relations, half, third);
  rec.check("case_b.beta_list", "realizable (beta, phi, psi) triangles with phi, psi > alpha", triples(want_b),
            triples(bo.realized) + (bo.unrealized.empty() ? "" : ", " + str(bo.unrealized.size()) + " unrealized"),
            bo.realized == want_b && bo.unrealized.empty());

  bool beta_beta = false;
  for (const auto& t : bo.realized) beta_beta = beta_beta || std::count(t.begin(), t.end(), half) >= 2;
  rec.check("case_b.no_beta_beta", "realizable triangles with two right angles", "none",
            beta_beta ? "found" : "none", !beta_beta);

  std::size_t five = 0;
  for (const auto& c : beta)
    if (c.realized() && c.candidate.type() == std::array<Rational, 3>{half, 2 * third, 2 * third})
      five = c.search.tiling->tiles.size();
  rec.check("case_b.five_tiles", "(beta, 2 alpha, 2 alpha) tiled and verified", "5 tiles", str(five) + " tiles",
            five == 5);
  add_figures(rec, "case_b_alpha", alpha, std::pair{third, half});
  add_figures(rec, "case_b_beta", beta, std::pair{third, half});

  auto forced = forced_alpha_alpha_beta_diagram();
  auto t0 = coxeter::TriangleType::parse("(alpha,alpha,beta)", forced.relations());
  auto orbs = coxeter::triangle_orbits(forced, t0);
  rec.check("case_b.forced", "(alpha,alpha,beta)-orbits in the forced diagram", "3 (not rich)",
            str(orbs.size()) + " of " + str(forced.count(t0)) + " copies", orbs.size() == 3);

  auto rich = alpha_alpha_beta_diagrams(lists);
  rec.check("case_b.diagrams", "rich diagrams whose (alpha**) and (beta**) triangles are realizable", "0",
            str(rich.size()), rich.empty());
}

void case_c(Recorder& rec, const Config& cfg) {
  auto singles = single_alpha_pair_diagrams();
  std::set<std::vector<int>> got, want;
  for (const auto& d : singles) got.insert(coxeter::canonical_form(d));
  for (const char* n : {"single_alpha_pair_1", "single_alpha_pair_2"})
    want.insert(coxeter::canonical_form(fixture(cfg, n)));
  std::vector<std::string> orbit_counts;
  bool three = true;
  auto t0 = coxeter::TriangleType::parse("(alpha,beta,gamma)");
  for (const auto& d : singles) {
    auto o = coxeter::triangle_orbits(d, t0).size();
    orbit_counts.push_back(str(d.count(t0)) + " copies in " + str(o) + " orbits");
    three = three && o == 3;
  }
  rec.check("case_c.single_alpha", "diagrams where T0 is the only (alpha**) triangle", "2, each 6 copies in 3 orbits",
            str(singles.size()) + (got == want ? " (fixtures)" : " (differ from fixtures)") + ": " + join(orbit_counts, "; "),
            singles.size() == 2 && got == want && three);

  auto sols = spherical::min_angle_solutions(100);
  std::vector<std::string> v;
  for (const auto& q : sols) v.push_back(AngleForm::pi_times(q).to_string());
  rec.equal("case_c.alpha_values", "alpha in (pi/6, pi/3) with m alpha + n pi/3 + p pi/2 = pi",
            "{1/5*pi, 2/9*pi, 1/4*pi}", "{" + join(v) + "}");

  auto all_lists = load_tile_lists(cfg.fixture_dir);
  const std::vector<std::pair<std::string, std::string>> edges_expected = {
      {"pi4", "(0.615, 0.785, 0.955)"}, {"pi5", "(0.365, 0.554, 0.652)"}, {"2pi9", "(0.485, 0.680, 0.812)"}};
  for (const auto& [name, want_edges] : edges_expected) {
    auto lists = find_lists(all_lists, name, cfg);
    auto e = lists.tile.edges();
    rec.equal("case_c.edges." + name, "edge lengths (a, b, c) of T0, three decimals", want_edges,
              "(" + fixed(e[0], 3) + ", " + fixed(e[1], 3) + ", " + fixed(e[2], 3) + ")");

    const auto& a = lists.tile.angles[0];
    const auto& b = lists.tile.angles[1];
    auto alpha = realize_candidates(lists.tile, a, Rational(0), cfg.node_budget, "alpha");
    auto beta = realize_candidates(lists.tile, b, a, cfg.node_budget, "beta");
    auto ao = summarize(alpha), bo = summarize(beta);
    auto want_a = listed(lists.alpha_list, lists.relations, a, Rational(0));
    auto want_b = listed(lists.beta_list, lists.relations, b, a);
    rec.check("case_c.lists." + name + ".alpha", "realizable (alpha**) triangles other than T0", triples(want_a),
              triples(ao.realized), ao.realized == want_a && ao.unrealized.empty());
    rec.check("case_c.lists." + name + ".beta", "realizable (beta, phi, psi) triangles with phi, psi > alpha",
              triples(want_b), triples(bo.realized),
              bo.realized == want_b && bo.unrealized.size() == (name == "2pi9" ? 1u : 0u));
    std::vector<std::string> ns;
    for (const auto* cs : {&alpha, &beta})
      for (const auto& c : *cs)
        if (c.realized()) ns.push_back(str(c.candidate.n));
    std::size_t listed_total = lists.alpha_list.size() + lists.beta_list.size();
    std::size_t tiled = ao.realized.size() + bo.realized.size();
    rec.check("case_c.tilings." + name, "every listed triangle tiled by T0 and verified",
              str(listed_total) + " tilings", str(tiled) + " tilings, n = " + join(ns, ","),
              tiled == listed_total);
    add_figures(rec, "case_c_" + name + "_alpha", alpha);
    add_figures(rec, "case_c_" + name + "_beta", beta);

    if (name == "2pi9") {
      std::string actual = "none";
      bool ok = false;
      if (bo.unrealized.size() == 1) {
        const auto& c = *bo.unrealized[0];
        auto t = c.candidate.type();
        auto eb = lists.tile.edges();
        std::array<double, 3> rad{t[0].get_d() * pi, t[1].get_d() * pi, t[2].get_d() * pi};
        auto el = spherical::edge_lengths(rad);
        // the two equal edges have length 2b; the tiling of one must use a or c
        double two_b = 2 * eb[1];
        int at_2b = 0;
        for (double x : el) at_2b += std::abs(x - two_b) < 1e-9;
        auto m1 = realize::edge_combination(two_b - eb[0], eb, cfg.coeff_bound, cfg.tol);
        auto m2 = realize::edge_combination(two_b - eb[2], eb, cfg.coeff_bound, cfg.tol);
        actual = triple_to_string(t) + " " + realize::status_name(c.search.status) + "; 2b-a = " +
                 fixed(two_b - eb[0], 3) + (m1.matched ? " expressible" : " not expressible") +
                 ", 2b-c = " + fixed(two_b - eb[2], 3) + (m2.matched ? " expressible" : " not expressible");
        ok = t == std::array<Rational, 3>{b, b, 2 * a + b} && at_2b == 2 && !m1.matched && !m2.matched &&
             c.search.status != realize::SearchStatus::found;
      }
      rec.check("case_c.extra.2pi9", "the one expressible candidate without a tiling",
                "(1/3*pi,1/3*pi,7/9*pi); 2b-a and 2b-c not expressible", actual, ok);
    }
  }

  auto shapes = alpha_beta_shapes();
  auto fx = alpha_beta_shapes_fixture(cfg.fixture_dir);
  std::vector<std::string> sv;
  for (const auto& [k, s] : shapes) sv.push_back(s.first + "/" + s.second);
  rec.check("case_c.shapes", "alpha-edge / beta-edge subgraphs of rich diagrams", "6 classes (fixture a-f)",
            str(shapes.size()) + " classes" + (shapes == fx ? " (fixture a-f)" : " (differ from fixture)") + ": " + join(sv, ", "),
            shapes.size() == 6 && shapes == fx);

  const std::vector<std::tuple<std::string, std::size_t, std::vector<std::string>>> rich_expected = {
      {"pi4", 3, {"pi4_i", "pi4_ii", "pi4_iii"}}, {"pi5", 3, {"pi5_i", "pi5_ii", "pi5_iii"}}, {"2pi9", 0, {}}};
  for (const auto& [name, count, fixtures] : rich_expected) {
    auto lists = find_lists(all_lists, name, cfg);
    auto generic = rich_diagrams(lists, true, cfg.tol, cfg.coeff_bound);
    auto hand = rich_diagrams(lists, false, cfg.tol, cfg.coeff_bound);
    std::set<std::vector<int>> g1, g2, w;
    for (const auto& d : generic) g1.insert(coxeter::canonical_form(d));
    for (const auto& d : hand) g2.insert(coxeter::canonical_form(d));
    for (const auto& f : fixtures) w.insert(coxeter::canonical_form(fixture(cfg, f)));
    rec.check("case_c.rich." + name, "rich diagrams with listed (alpha**) and (beta**) triangles",
              str(count) + (count ? " (fixtures)" : ""),
              str(generic.size()) + (count && g1 == w ? " (fixtures)" : ""), generic.size() == count && g1 == w);
    rec.check("case_c.rich_hand." + name, "same enumeration with the hand exclusions instead of the generic filter",
              str(count), str(hand.size()), hand.size() == count && g2 == w);
  }

  struct DetRow {
    std::string fixture, label;
    std::optional<QuadExt> exact;
    double rounded;
  };
  const std::vector<DetRow> dets = {
      {"pi4_i", "B1", QuadExt(Rational(1, 16), 0, 2), 0.06}, {"pi4_ii", "B2", QuadExt(Rational(1, 8), 0, 2), 0.13},
      {"pi4_iii", "B3", std::nullopt, 0.21},                 {"pi5_i", "C1", std::nullopt, 0.16},
      {"pi5_ii", "C2", std::nullopt, 0.16},                  {"pi5_iii", "C3", std::nullopt, 0.12},
  };
  for (const auto& row : dets) {
    auto rep = gram::fiedler_check(gram::gram_from_diagram(fixture(cfg, row.fixture)), cfg.fiedler_tol);
    std::string exact_s = rep.det_exact ? exact::to_string(*rep.det_exact) : "?";
    bool ok = !rep.singular && !rep.can_be_simplex;
    std::string expected;
    if (row.exact) {
      expected = "det = " + row.exact->to_string() + ", nonsingular";
      ok = ok && rep.det_exact && std::holds_alternative<QuadExt>(*rep.det_exact) &&
           std::get<QuadExt>(*rep.det_exact) == *row.exact;
    } else {
      expected = "det ~ " + fixed(row.rounded, 2) + " (+-0.005), nonsingular";
      ok = ok && std::abs(rep.det - row.rounded) <= 0.005 + 1e-12;
    }
    rec.check("case_c.det." + row.label, "Gram determinant of diagram " + row.fixture, expected,
              "det = " + exact_s + " ~ " + fixed(rep.det, 4) + (rep.singular ? ", singular" : ", nonsingular"), ok);
  }
}

void hill_checks(Recorder& rec, const Config& cfg) {
  std::vector<std::pair<int, int>> grid;
  if (cfg.d || cfg.m) {
    grid.push_back({cfg.d.value_or(2), cfg.m.value_or(1)});
  } else {
    grid = {{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 3}, {4, 2}, {4, 3}};
  }
  std::set<int> dims;
  for (auto [d, m] : grid) dims.insert(d);

  for (int d : dims) {
    std::string tag = "d" + str(d);
    Rational fact = 1;
    for (int k = 2; k <= d; ++k) fact *= k;
    Rational v0 = hill::hill_simplex(d, 0).volume();
    Rational v1 = hill::hill_simplex(d, 1).volume();
    Rational v2 = hill::hill_simplex(d, 2).volume();
    Rational want0 = 1 / (fact * Rational(1L << d));
    rec.check("hill.volumes." + tag, "volumes of H0, H1, H2", exact::to_string(want0) + " : x2 : x4",
              exact::to_string(v0) + " : x" + exact::to_string(Rational(v1 / v0)) + " : x" + exact::to_string(Rational(v2 / v0)),
              v0 == want0 && v1 == 2 * v0 && v2 == 4 * v0);

    auto around = hill::tiles_around(std::vector<long>(d, 0));
    auto g = hill::compatibility_graph(around);
    std::vector<std::string> prof;
    for (auto [size, n] : g.profile()) prof.push_back(str(n) + " x size " + str(size));
    rec.check("hill.cycles." + tag, "compatibility components of the H1 tiles in one cube",
              str(around.size() / 4) + " four-cycles", join(prof) + (g.all_four_cycles() ? ", all four-cycles" : ""),
              g.all_four_cycles() && g.components.size() == around.size() / 4);

    bool fiedler = true;
    for (int i = 0; i <= 2; ++i)
      fiedler = fiedler &&
                gram::fiedler_check(gram::gram_from_angles(gram::dihedral_angles(hill::hill_simplex(d, i))),
                                    cfg.fiedler_tol)
                    .can_be_simplex;
    rec.check("hill.fiedler." + tag, "Gram matrices of H0, H1, H2 pass the simplex test", "pass",
              fiedler ? "pass" : "fail", fiedler);
  }

  for (auto [d, m] : grid) {
    std::string tag = "d" + str(d) + ".m" + str(m);
    auto r1 = hill::check_h1_tiling(d, m);
    rec.check("hill.h1." + tag, "m H1 tiled by lattice copies of H1",
              str(r1.expected_tiles) + " tiles, volume, congruence, facets",
              str(r1.tiles) + " tiles, volume " + exact::to_string(r1.total_volume) + " of " +
                  exact::to_string(r1.target_volume) + ", congruent " + yes_no(r1.congruent_ok) + ", facets " +
                  yes_no(r1.facets_ok),
              r1.ok());
    std::string actual;
    bool ok = false;
    try {
      auto r2 = hill::pair_h2_tiling(d, m);
      actual = str(r2.tiles) + " H1 tiles in " + str(r2.pairs.size()) + " pairs, volume " +
               exact::to_string(r2.total_volume) + " of " + exact::to_string(r2.target_volume);
      ok = r2.ok();
    } catch (const hill::PairingFailure& e) {
      actual = std::string("pairing failed: ") + e.what();
    }
    long md = 1;
    for (int k = 0; k < d; ++k) md *= m;
    rec.check("hill.h2." + tag, "m H2 tiled by compatible pairs of H1 tiles, each a copy of H2",
              str(2 * md) + " H1 tiles in " + str(md) + " pairs", actual, ok);
  }
}

using ScenarioFn = void (*)(Recorder&, const Config&);

ScenarioFn lookup(const std::string& name) {
  if (name == "three-dim") return three_dim;
  if (name == "two-indivisible") return two_indivisible;
  if (name == "case-a") return case_a;
  if (name == "case-b") return case_b;
  if (name == "case-c") return case_c;
  if (name == "hill") return hill_checks;
  return nullptr;
}

Report run_one(const std::string& name, const Config& cfg, const AnchorTable& anchors) {
  Report r;
  r.scenario = name;
  r.config = cfg;
  auto start = Clock::now();
  Recorder rec(r, anchors);
  lookup(name)(rec, cfg);
  r.total_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return r;
}

}  // namespace

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names = {"three-dim", "two-indivisible", "case-a", "case-b", "case-c", "hill"};
  return names;
}

std::filesystem::path default_fixture_dir() { return REPTILE_FIXTURE_DIR; }

Report run_scenario(const std::string& name, Config config) {
  if (name != "all" && !lookup(name)) throw UnknownScenario("unknown scenario: " + name);
  if (config.tol <= 0) throw std::invalid_argument("tol must be positive");
  if (config.coeff_bound < 1) throw std::invalid_argument("coeff-bound must be at least 1");
  if (config.node_budget < 1) throw std::invalid_argument("node-budget must be at least 1");
  if (config.d && (*config.d < 2 || *config.d > 6)) throw std::invalid_argument("d must be in 2..6");
  if (config.m && (*config.m < 1 || *config.m > 6)) throw std::invalid_argument("m must be in 1..6");
  if (config.fixture_dir.empty()) config.fixture_dir = default_fixture_dir();
  auto anchors = AnchorTable::load(config.fixture_dir / "anchors.json");

  if (name != "all") return run_one(name, config, anchors);

  Report all;
  all.scenario = "all";
  all.config = config;
  auto start = Clock::now();
  std::vector<std::future<Report>> parts;
  for (const auto& n : scenario_names())
    parts.push_back(std::async(config.parallel ? std::launch::async : std::launch::deferred,
                               [&, n] { return run_one(n, config, anchors); }));
  for (auto& p : parts) all.merge(p.get());  // fixed order regardless of finishing time
  all.total_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return all;
}

}  // namespace reptile::scenarios
