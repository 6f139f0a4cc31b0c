#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "reptile/coxeter/diagram.hpp"
#include "reptile/gram/gram.hpp"
#include "reptile/realize/tiling.hpp"
#include "reptile/scenarios/scenarios.hpp"
#include "reptile/spherical/triangle.hpp"

namespace fs = std::filesystem;
using namespace reptile;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

// Target angles may use the tile's symbols: "beta,2*alpha,2*alpha".
std::array<exact::Rational, 3> parse_target(const std::string& text, const realize::TileSpec& tile) {
  std::array<exact::Rational, 3> v;
  std::stringstream ss(text);
  std::string part;
  int n = 0;
  auto rel = tile.relations();
  while (std::getline(ss, part, ',')) {
    if (n == 3) throw std::invalid_argument("target: expected three angles");
    if (part.find_first_not_of("0123456789/ -") == std::string::npos) {
      v[n++] = exact::parse_rational(part);
      continue;
    }
    auto c = rel.constant(angles::parse_angle(part));
    if (!c) throw std::invalid_argument("target: cannot evaluate " + part);
    v[n++] = *c;
  }
  if (n != 3) throw std::invalid_argument("target: expected three angles");
  return v;
}

int cmd_run(const std::string& name, scenarios::Config cfg, const std::string& format, const std::string& out,
            bool timings) {
  auto report = scenarios::run_scenario(name, cfg);
  auto jsonl = scenarios::to_jsonl(report, timings);
  if (format == "json")
    std::cout << jsonl;
  else
    std::cout << scenarios::summary_table(report, timings);
  if (!out.empty()) {
    // an unusable --out is a usage error, whatever the checkpoints say
    std::vector<fs::path> files;
    try {
      files = scenarios::emit_figures(report, out);
    } catch (const std::runtime_error& e) {
      throw std::invalid_argument(e.what());
    }
    std::error_code ec;
    fs::create_directories(out, ec);
    std::ofstream f(fs::path(out) / "report.jsonl");
    f << jsonl;
    if (!f) throw std::invalid_argument("cannot write " + (fs::path(out) / "report.jsonl").string());
    if (format != "json") std::cout << files.size() << " figure(s) written to " << out << '\n';
  }
  return report.ok() ? kOk : kFailed;
}

int cmd_tile(const std::string& t0, const std::string& target, std::uint64_t budget, const std::string& svg) {
  auto tile = realize::TileSpec::parse(t0);
  auto want = parse_target(target, tile);
  std::array<double, 3> rad;
  for (int i = 0; i < 3; ++i) rad[i] = want[i].get_d() * std::numbers::pi;
  if (!spherical::is_valid(rad)) {
    std::cerr << "target is not a spherical triangle\n";
    return kUsage;
  }
  realize::SearchOptions opt;
  opt.node_budget = budget;
  auto res = realize::search_tiling(want, tile, opt);
  std::cout << "T0 " << tile.to_string() << "  target (" << exact::to_string(want[0]) << ", "
            << exact::to_string(want[1]) << ", " << exact::to_string(want[2]) << ") pi\n";
  std::cout << "status " << realize::status_name(res.status) << ", tiles " << res.tiles_needed << ", nodes "
            << res.nodes << '\n';
  if (!res.tiling) return kFailed;
  auto v = realize::verify_tiling(*res.tiling, tile);
  std::cout << "verify " << (v.ok ? "ok" : "FAILED: " + v.message) << '\n';
  if (!svg.empty()) {
    std::ofstream f(svg);
    f << realize::to_svg(*res.tiling, tile.to_string());
    if (!f) throw std::runtime_error("cannot write " + svg);
  } else {
    std::cout << realize::to_json(*res.tiling) << '\n';
  }
  return v.ok ? kOk : kFailed;
}

std::string subset_name(const coxeter::CoxeterDiagram& d, const coxeter::Subset& s) {
  std::string out;
  for (int v : s) {
    if (!out.empty() && d.name(v).size() > 1) out += '-';
    out += d.name(v);
  }
  return out;
}

int cmd_diagram(const std::string& file, const std::string& what) {
  auto d = coxeter::load_diagram(file);
  if (what == "auts") {
    auto g = coxeter::automorphisms(d);
    std::cout << "order " << g.order() << '\n';
    for (const auto& p : g.elements) std::cout << coxeter::to_string(p) << '\n';
  } else if (what == "orbits") {
    for (const auto& label : d.alphabet()) {
      auto orbits = coxeter::edge_orbits(d, label);
      std::cout << label.to_string() << ": " << orbits.size() << " edge orbit(s)\n";
      for (const auto& o : orbits) {
        std::cout << "  ";
        for (const auto& e : o) std::cout << subset_name(d, e) << ' ';
        std::cout << '\n';
      }
    }
    std::set<coxeter::TriangleType> types;
    for (const auto& t : d.triangles()) types.insert(d.triangle_type(t[0], t[1], t[2]));
    for (const auto& t : types)
      std::cout << t.to_string() << ": " << d.count(t) << " copies, " << coxeter::triangle_orbits(d, t).size()
                << " orbit(s)\n";
  } else {
    auto g = gram::gram_from_diagram(d);
    if (g.exact) {
      for (std::size_t i = 0; i < g.exact->size(); ++i) {
        for (std::size_t j = 0; j < g.exact->size(); ++j) std::cout << (j ? "  " : "") << exact::to_string((*g.exact)(i, j));
        std::cout << '\n';
      }
    } else if (g.numeric) {
      std::cout << std::setprecision(6) << *g.numeric << '\n';
    }
    if (!g.warning.empty()) std::cout << "warning: " << g.warning << '\n';
    if (g.numeric) {
      auto f = gram::fiedler_check(g);
      std::cout << "det " << f.det << ", rank " << f.rank << ", " << f.verdict << '\n';
    }
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reptile-lab: reproduces the reptile simplex case analysis"};
  app.require_subcommand(1);

  scenarios::Config cfg;
  std::string scenario, format = "text", out, fixtures;
  bool timings = false;
  int d = 0, m = 0;
  auto* run = app.add_subcommand("run", "run a scenario and print its checkpoints");
  run->add_option("scenario", scenario, "three-dim, two-indivisible, case-a, case-b, case-c, hill or all")->required();
  run->add_option("--tol", cfg.tol, "edge-combination tolerance")->check(CLI::PositiveNumber);
  run->add_option("--coeff-bound", cfg.coeff_bound, "bound on edge-combination coefficients")->check(CLI::PositiveNumber);
  run->add_option("--node-budget", cfg.node_budget, "tiling search node budget")->check(CLI::PositiveNumber);
  run->add_option("--out", out, "directory for SVG figures and report.jsonl");
  run->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  run->add_option("--d", d, "hill: dimension");
  run->add_option("--m", m, "hill: scale factor");
  run->add_option("--fixtures", fixtures, "fixture directory");
  run->add_flag("--timings", timings, "include timings");

  std::string t0, target, svg;
  std::uint64_t budget = 1000000;
  auto* tile = app.add_subcommand("tile", "tile a target triangle by copies of T0");
  tile->add_option("T0", t0, "tile angles, e.g. pi/4,pi/3,pi/2")->required();
  tile->add_option("target", target, "target angles, e.g. beta,2*alpha,2*alpha")->required();
  tile->add_option("--node-budget", budget)->check(CLI::PositiveNumber);
  tile->add_option("--svg", svg, "write the tiling as SVG instead of JSON");

  std::string file, what;
  auto* diagram = app.add_subcommand("diagram", "inspect a diagram fixture");
  diagram->add_option("fixture", file)->required()->check(CLI::ExistingFile);
  diagram->add_option("query", what)->required()->check(CLI::IsMember({"auts", "orbits", "gram"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*run) {
      if (d) cfg.d = d;
      if (m) cfg.m = m;
      cfg.fixture_dir = fixtures.empty() ? scenarios::default_fixture_dir() : fs::path(fixtures);
      return cmd_run(scenario, cfg, format, out, timings);
    }
    if (*tile) return cmd_tile(t0, target, budget, svg);
    return cmd_diagram(file, what);
  } catch (const scenarios::UnknownScenario& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
}
