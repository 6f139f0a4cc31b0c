// One line per acceptance criterion. Exit status is 0 when the failing
// criteria are exactly the ones named by --expect-fail (none by default).
#include <chrono>
#include <cmath>
#include <cstring>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <numbers>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "reptile/coxeter/enumerate.hpp"
#include "reptile/exact/sturm.hpp"
#include "reptile/gram/gram.hpp"
#include "reptile/hill/hill.hpp"
#include "reptile/realize/candidates.hpp"
#include "reptile/realize/degree.hpp"
#include "reptile/realize/tiling.hpp"
#include "reptile/scenarios/checks.hpp"
#include "reptile/spherical/triangle.hpp"

#ifndef REPTILE_FIXTURE_DIR
#define REPTILE_FIXTURE_DIR "fixtures"
#endif

using namespace reptile;
using exact::Poly;
using exact::Rational;

namespace {

const std::filesystem::path kFixtures = REPTILE_FIXTURE_DIR;

struct Outcome {
  bool pass = false;
  std::string detail;
};

coxeter::CoxeterDiagram diagram(const std::string& name) {
  return coxeter::load_diagram((kFixtures / "diagrams" / (name + ".json")).string());
}

std::string fixed(double x, int dp) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(dp) << x;
  return s.str();
}

// 1
Outcome determinant_identities() {
  // factored forms, t = cos(beta)
  const Poly t = Poly::variable();
  auto p = [](std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.push_back(x);
    return Poly(v);
  };
  const Poly t2 = t * t, t4 = t2 * t2;
  const Poly f = p({-1, 2});
  std::vector<Poly> paper = {
      -(t2 * f * p({-2, -1, 2}) * p({-2, -1, 4, 4})),
      -(t2 * f * p({-2, 1, 2}) * p({-2, -3, 2, 4})),
      -(t4 * f * p({1, 2}) * p({-3, 0, 4})),
      -(Poly(8) * t4 * p({-1, 0, 2}) * p({2, 0, -7, 0, 4})),
  };
  int ok = 0;
  for (int i = 0; i < 4; ++i) {
    auto g = gram::gram_from_diagram(diagram(std::string("case_a_") + char('a' + i)));
    ok += std::get<Poly>(g.exact->det()) == paper[i];
  }
  return {ok == 4, std::to_string(ok) + "/4 expanded determinants equal the factored forms"};
}

// 2
Outcome root_sets() {
  const std::vector<std::vector<double>> gamma = {
      {0, .5, -.78, 1.28, .63}, {0, .5, -1.28, .78, .92}, {0, .5, -.5, .87, -.87}, {0, .71, -.71, 1.18, -1.18, .60, -.60}};
  int match = 0, clean = 0;
  for (int i = 0; i < 4; ++i) {
    auto det = std::get<Poly>(gram::gram_from_diagram(diagram(std::string("case_a_") + char('a' + i))).exact->det());
    std::multiset<long> got, want;
    for (const auto& r : exact::isolate_roots(det, Rational(1, 100000)))
      got.insert(std::lround(r.midpoint().get_d() * 100));
    for (double x : gamma[i]) want.insert(std::lround(x * 100));
    match += got == want;
    clean += exact::sturm_count(det, Rational(0), Rational(1, 2)) == 0;
  }
  return {match == 4 && clean == 4,
          std::to_string(match) + "/4 root sets match to 2 dp, " + std::to_string(clean) + "/4 root-free on (0, 1/2)"};
}

// 3
Outcome exact_determinants() {
  struct Row {
    const char* fixture;
    const char* label;
    Rational exact;  // 0: compare to two decimals only
    double approx;
  };
  const Row rows[] = {{"pi4_i", "B1", Rational(1, 16), 0.06}, {"pi4_ii", "B2", Rational(1, 8), 0.13},
                      {"pi4_iii", "B3", 0, 0.21},             {"pi5_i", "C1", 0, 0.16},
                      {"pi5_ii", "C2", 0, 0.16},              {"pi5_iii", "C3", 0, 0.12}};
  bool all = true;
  std::string detail;
  for (const auto& r : rows) {
    auto rep = gram::fiedler_check(gram::gram_from_diagram(diagram(r.fixture)));
    bool ok;
    if (r.exact != 0) {
      auto* q = rep.det_exact ? std::get_if<exact::QuadExt>(&*rep.det_exact) : nullptr;
      ok = q && *q == exact::QuadExt(r.exact, 0, q->field());
    } else {
      ok = std::abs(rep.det - r.approx) <= 0.005;
    }
    all = all && ok;
    detail += std::string(detail.empty() ? "" : ", ") + r.label + " " + fixed(rep.det, 4);
  }
  return {all, detail};
}

// 4
Outcome edge_lengths() {
  const std::vector<std::pair<std::string, std::array<double, 3>>> want = {
      {"pi/4,pi/3,pi/2", {0.615, 0.785, 0.955}},
      {"pi/5,pi/3,pi/2", {0.365, 0.554, 0.652}},
      {"2pi/9,pi/3,pi/2", {0.485, 0.680, 0.812}}};
  bool ok = true;
  std::string detail;
  for (const auto& [tile, abc] : want) {
    auto e = realize::TileSpec::parse(tile).edges();
    for (int i = 0; i < 3; ++i) ok = ok && std::abs(std::round(e[i] * 1000) / 1000 - abc[i]) < 1e-9;
    detail += (detail.empty() ? "" : "; ") + fixed(e[0], 3) + " " + fixed(e[1], 3) + " " + fixed(e[2], 3);
  }
  return {ok, detail};
}

// 5
Outcome min_angle_values() {
  auto sols = spherical::min_angle_solutions(100);
  std::set<Rational> got(sols.begin(), sols.end());
  std::set<Rational> want = {Rational(1, 4), Rational(2, 9), Rational(1, 5)};
  std::string detail;
  for (const auto& q : sols) detail += (detail.empty() ? "" : ", ") + exact::to_string(q) + " pi";
  return {got == want && sols.size() == 3, "{" + detail + "}"};
}

// 6
Outcome candidate_lists() {
  auto all = scenarios::load_tile_lists(kFixtures);
  int lists_ok = 0, lists = 0;
  std::vector<std::string> extras;
  bool extra_ok = false;
  for (const auto& l : all) {
    if (l.name == "aab") continue;
    const auto& a = l.tile.angles[0];
    const auto& b = l.tile.angles[1];
    for (int side = 0; side < 2; ++side) {
      const Rational& tau = side ? b : a;
      const Rational phi_min = side ? a : Rational(0);
      std::set<std::array<Rational, 3>> want, got;
      for (const auto& s : side ? l.beta_list : l.alpha_list) want.insert(scenarios::angle_triple(s, l.relations));
      auto cs = scenarios::realize_candidates(l.tile, tau, phi_min, 1000000);
      for (const auto& c : cs) {
        if (!c.candidate.expressible()) continue;
        if (c.realized()) {
          got.insert(c.candidate.type());
          continue;
        }
        extras.push_back(l.name + " " + scenarios::triple_to_string(c.candidate.type()));
        auto e = l.tile.edges();
        auto m1 = realize::edge_combination(2 * e[1] - e[0], e, l.tile.coeff_bound, l.tile.tol);
        auto m2 = realize::edge_combination(2 * e[1] - e[2], e, l.tile.coeff_bound, l.tile.tol);
        extra_ok = l.name == "2pi9" && c.candidate.type() == std::array<Rational, 3>{b, b, 2 * a + b} &&
                   !m1.matched && !m2.matched;
      }
      ++lists;
      lists_ok += got == want;
    }
  }
  std::string ex = extras.empty() ? "none" : extras[0];
  for (std::size_t i = 1; i < extras.size(); ++i) ex += ", " + extras[i];
  return {lists_ok == lists && extras.size() == 1 && extra_ok,
          std::to_string(lists_ok) + "/" + std::to_string(lists) + " lists reproduced; unrealized: " + ex};
}

// 7
Outcome tilings() {
  auto all = scenarios::load_tile_lists(kFixtures);
  int found = 0, total = 0, max_n = 0;
  std::uint64_t nodes = 0;
  std::map<int, int> by_n;
  for (const auto& l : all) {
    std::set<std::array<Rational, 3>> targets;
    for (const auto* v : {&l.alpha_list, &l.beta_list})
      for (const auto& s : *v) targets.insert(scenarios::angle_triple(s, l.relations));
    for (const auto& t : targets) {
      Rational ratio = (t[0] + t[1] + t[2] - 1) / l.tile.area();
      int n = static_cast<int>(ratio.get_num().get_si());
      realize::SearchOptions o;
      o.n_max = n;
      o.node_budget = 1000000;
      auto r = realize::search_tiling(t, l.tile, o);
      ++total;
      nodes += r.nodes;
      if (r.tiling && realize::verify_tiling(*r.tiling, l.tile).ok) {
        ++found;
        ++by_n[n];
        max_n = std::max(max_n, n);
      }
    }
  }
  std::string hist;
  for (auto [n, c] : by_n) hist += (hist.empty() ? "" : " ") + std::to_string(c) + "x" + std::to_string(n);
  bool small = max_n <= 5;
  return {found == total && small,
          std::to_string(found) + "/" + std::to_string(total) + " tiled and verified, " + std::to_string(nodes) +
              " nodes; tiles per triangle " + hist + (small ? "" : "; n <= 5 does not hold (the area ratio forces n)")};
}

// 8
Outcome enumerations() {
  auto a = scenarios::alpha_two_beta_diagrams();
  auto valid = scenarios::valid_diagrams(a);
  std::vector<std::size_t> rich;
  for (const auto& l : scenarios::load_tile_lists(kFixtures))
    if (l.name != "aab") rich.push_back(scenarios::rich_diagrams(l, true).size());
  auto shapes = scenarios::alpha_beta_shapes();
  coxeter::PartitionConstraints pc;
  pc.min_types = 2;
  pc.min_copies = 4;
  pc.trivial_automorphisms = true;
  auto parts = coxeter::enumerate_edge_partitions(5, pc);
  // fixture order: pi4, pi5, 2pi9
  bool ok = a.size() == 5 && valid.size() == 4 && rich == std::vector<std::size_t>{3, 3, 0} && shapes.size() == 6 &&
            parts.empty();
  std::string r;
  for (auto x : rich) r += (r.empty() ? "" : "/") + std::to_string(x);
  return {ok, std::to_string(a.size()) + " -> " + std::to_string(valid.size()) + " diagrams, rich " + r + ", " +
                  std::to_string(shapes.size()) + " shape classes, " + std::to_string(parts.size()) + " partitions"};
}

bool dihedral_of_order_8(const coxeter::AutGroup& g) {
  if (g.order() != 8) return false;
  int involutions = 0;
  for (const auto& p : g.elements)
    involutions += !coxeter::is_identity(p) && coxeter::is_identity(coxeter::compose(p, p));
  return involutions == 5;  // D4; the other groups of order 8 have 1, 3 or 7
}

// 9
Outcome symmetry_fixtures() {
  const std::vector<std::pair<std::string, std::size_t>> orders = {
      {"two_indivisible_a", 4}, {"two_indivisible_b", 4}, {"two_indivisible_c", 4},
      {"two_indivisible_d", 8}, {"two_indivisible_e", 4}, {"two_indivisible_f", 2}};
  bool ok = true;
  std::string detail;
  for (const auto& [name, want] : orders) {
    auto g = coxeter::automorphisms(diagram(name));
    ok = ok && g.order() == want;
    detail += std::to_string(g.order()) + " ";
  }
  ok = ok && dihedral_of_order_8(coxeter::automorphisms(diagram("two_indivisible_d")));
  auto cycle = diagram("3d_alpha_cycle");
  auto cg = coxeter::automorphisms(cycle);
  auto alpha_orbits = coxeter::edge_orbits(cycle, angles::parse_angle("alpha")).size();
  ok = ok && cg.order() == 8 && dihedral_of_order_8(cg) && alpha_orbits == 1;
  auto d = diagram("case_a_d");
  auto orbits = coxeter::triangle_orbits(d, coxeter::TriangleType::parse("(alpha,beta,gamma)", d.relations())).size();
  ok = ok && orbits == 4;
  return {ok, "two-indivisible orders " + detail + "| 4-cycle |G| " + std::to_string(cg.order()) + ", alpha-edge orbits " +
                  std::to_string(alpha_orbits) + " | case_a_d orbits " + std::to_string(orbits)};
}

// 10
Outcome pair_orbits() {
  // orbit count on pairs by direct union-find, not Burnside
  const int n = 5;
  auto pairs = coxeter::all_subsets(n, 2);
  std::set<std::set<coxeter::Perm>> groups;
  auto perms = coxeter::all_permutations(n);
  for (std::size_t i = 0; i < perms.size(); ++i)
    for (std::size_t j = i; j < perms.size(); ++j) {
      auto g = coxeter::generate_group(n, {perms[i], perms[j]});
      groups.insert({g.elements.begin(), g.elements.end()});
    }
  std::size_t worst = 0, at_max = 0, transposition = 0;
  for (const auto& g : groups) {
    if (g.size() == 1) continue;
    std::vector<int> parent(pairs.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& p : g)
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        coxeter::Subset img{p[pairs[k][0]], p[pairs[k][1]]};
        std::sort(img.begin(), img.end());
        auto it = std::find(pairs.begin(), pairs.end(), img);
        parent[find(static_cast<int>(k))] = find(static_cast<int>(it - pairs.begin()));
      }
    std::size_t orbits = 0;
    for (std::size_t k = 0; k < pairs.size(); ++k) orbits += find(static_cast<int>(k)) == static_cast<int>(k);
    if (orbits > worst) worst = orbits, at_max = 0, transposition = 0;
    if (orbits == worst) {
      ++at_max;
      int moved = 0;
      for (const auto& p : g)
        for (int i = 0; i < n; ++i) moved += p[i] != i;
      transposition += g.size() == 2 && moved == 2;
    }
  }
  auto lib = scenarios::survey_pair_orbits(n);
  bool ok = worst == 7 && coxeter::pair_orbit_bound(n) == 7 && at_max == transposition && at_max > 0 &&
            lib.worst == worst && lib.at_bound == at_max && lib.subgroups == groups.size();
  return {ok, std::to_string(groups.size()) + " subgroups, max " + std::to_string(worst) + " pair-orbits, reached by " +
                  std::to_string(at_max) + " groups, all generated by one transposition: " +
                  (at_max == transposition ? "yes" : "no")};
}

// (d-1)-volume of the facet opposite vertex i, squared, from the Gram determinant of its edge vectors
double facet_volume(const gram::EuclideanSimplex& s, int skip) {
  std::vector<const std::vector<Rational>*> pts;
  for (int i = 0; i <= s.dim(); ++i)
    if (i != skip) pts.push_back(&s.vertices[i]);
  int k = static_cast<int>(pts.size()) - 1;
  Eigen::MatrixXd e(s.dim(), k);
  for (int j = 0; j < k; ++j)
    for (int r = 0; r < s.dim(); ++r) e(r, j) = Rational((*pts[j + 1])[r] - (*pts[0])[r]).get_d();
  return std::sqrt((e.transpose() * e).determinant());
}

// 11
Outcome fiedler_round_trip() {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 9);
  int passed = 0, runs = 0;
  double worst_kernel = 0;
  for (int d : {3, 4})
    for (int rep = 0; rep < 50; ++rep) {
      gram::EuclideanSimplex s;
      do {
        std::vector<std::vector<Rational>> v(d + 1, std::vector<Rational>(d));
        for (auto& p : v)
          for (auto& x : p) x = exact::make_rational(num(rng), den(rng));
        s = gram::EuclideanSimplex(v);
      } while (s.degenerate());
      ++runs;
      auto f = gram::fiedler_check(gram::gram_from_angles(gram::dihedral_angles(s)), 1e-9);
      // the kernel is proportional to the facet volumes
      Eigen::VectorXd vol(d + 1);
      for (int i = 0; i <= d; ++i) vol(i) = facet_volume(s, i);
      vol.normalize();
      double dev = f.kernel.size() == d + 1 ? (f.kernel - vol).cwiseAbs().maxCoeff() : 1;
      worst_kernel = std::max(worst_kernel, dev);
      passed += f.singular && f.rank == d && f.negative_semidefinite && f.kernel_positive && f.can_be_simplex &&
                dev < 1e-6;
    }
  std::ostringstream k;
  k << std::scientific << std::setprecision(1) << worst_kernel;
  return {passed == runs, std::to_string(passed) + "/" + std::to_string(runs) +
                              " simplices pass; kernel vs facet volumes max deviation " + k.str()};
}

// 12
Outcome hill_tilings() {
  const std::vector<std::pair<int, int>> grid = {{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 3}, {4, 2}, {4, 3}};
  int ok = 0;
  for (auto [d, m] : grid) {
    auto r1 = hill::check_h1_tiling(d, m);
    long md = 1;
    for (int k = 0; k < d; ++k) md *= m;
    bool pairs = false;
    try {
      auto r2 = hill::pair_h2_tiling(d, m);
      pairs = r2.ok() && static_cast<long>(r2.pairs.size()) == md;
    } catch (const hill::PairingFailure&) {
    }
    auto around = hill::tiles_around(std::vector<long>(d, 0));
    bool cycles = hill::compatibility_graph(around).all_four_cycles();
    ok += r1.ok() && static_cast<long>(r1.tiles) == md && r1.total_volume == r1.target_volume && r1.congruent_ok &&
          cycles && pairs;
  }
  return {ok == static_cast<int>(grid.size()), std::to_string(ok) + "/" + std::to_string(grid.size()) + " (d, m) cases"};
}

// exact division of x^4 - k by the monic x^deg + ..., integer coefficients
bool divides_quartic(long k, const std::vector<long>& monic) {
  std::vector<long> r = {-k, 0, 0, 0, 1};
  int deg = static_cast<int>(monic.size()) - 1;
  for (int top = 4; top >= deg; --top) {
    long c = r[top];
    for (int j = 0; j <= deg; ++j) r[top - deg + j] -= c * monic[j];
  }
  for (int j = 0; j < deg; ++j)
    if (r[j] != 0) return false;
  return true;
}

// degree of the minimal polynomial of the real root k^(1/4), by searching
// monic integer factors of x^4 - k that vanish there
int brute_degree(long k) {
  double x = std::pow(static_cast<double>(k), 0.25);
  for (long a = 0; a * a * a * a <= k; ++a)
    if (a * a * a * a == k) return 1;
  long bound = static_cast<long>(std::ceil(2 * x)) + 1;
  for (long p = -bound; p <= bound; ++p)
    for (long q = -k; q <= k; ++q)
      if (std::abs(x * x + p * x + q) < 1e-6 && divides_quartic(k, {q, p, 1})) return 2;
  return 4;
}

// 13
Outcome algebraic_degrees() {
  int agree = 0, total = 0;
  std::map<int, int> hist;
  for (long k = 2; k <= 100; ++k) {
    int oracle = brute_degree(k);
    ++total;
    ++hist[oracle];
    agree += realize::algebraic_degree(k, 4).degree == oracle;
  }
  std::string h;
  for (auto [deg, c] : hist) h += (h.empty() ? "" : ", ") + std::to_string(c) + " of degree " + std::to_string(deg);
  return {agree == total, std::to_string(agree) + "/" + std::to_string(total) + " agree with the oracle (" + h + ")"};
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expect_fail;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--expect-fail") == 0 && i + 1 < argc) {
      expect_fail.insert(std::atoi(argv[++i]));
    } else {
      std::cerr << "usage: acceptance [--expect-fail N]...\n";
      return 2;
    }
  }

  const std::vector<std::pair<std::string, Outcome (*)()>> criteria = {
      {"determinant identities", determinant_identities},
      {"root sets", root_sets},
      {"exact determinants", exact_determinants},
      {"edge lengths", edge_lengths},
      {"minimum angle values", min_angle_values},
      {"candidate lists", candidate_lists},
      {"tiling constructions", tilings},
      {"diagram enumerations", enumerations},
      {"symmetry fixtures", symmetry_fixtures},
      {"pair orbits", pair_orbits},
      {"Fiedler round trip", fiedler_round_trip},
      {"Hill tilings", hill_tilings},
      {"algebraic degree", algebraic_degrees},
  };
  std::set<int> failed;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    int id = static_cast<int>(i) + 1;
    if (!o.pass) failed.insert(id);
    std::cout << (o.pass ? "PASS " : "FAIL ") << std::setw(2) << id << " " << criteria[i].first << ": " << o.detail
              << " (" << fixed(s, 2) << " s)" << std::endl;
  }
  std::cout << criteria.size() - failed.size() << "/" << criteria.size() << " criteria pass";
  if (!expect_fail.empty()) {
    std::cout << "; expected to fail:";
    for (int x : expect_fail) std::cout << ' ' << x;
  }
  std::cout << '\n';
  return failed == expect_fail ? 0 : 1;
}
