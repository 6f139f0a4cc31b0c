#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

#include "reptile/scenarios/checks.hpp"
#include "reptile/scenarios/scenarios.hpp"

using namespace reptile;
using namespace reptile::scenarios;

namespace {

Config base() {
  Config c;
  c.fixture_dir = REPTILE_FIXTURE_DIR;
  return c;
}

std::filesystem::path scratch(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("reptile_test_" + name);
  std::filesystem::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("anchor lookup falls back to dotted prefixes") {
  auto t = AnchorTable::load(std::filesystem::path(REPTILE_FIXTURE_DIR) / "anchors.json");
  CHECK(t.at("hill.h1.d2.m1").provenance == Provenance::trivial);
  CHECK(t.at("hill.h1.d3.m2").key == "hill.h1");
  CHECK(t.at("hill.h1.d3.m2").provenance == Provenance::paper);
  CHECK_THROWS_AS(t.at("no.such.checkpoint"), AnchorMissing);
  for (const auto& [id, a] : t.all()) CHECK_MESSAGE(!a.source.empty(), id);
}

TEST_CASE("provenance names round-trip") {
  for (auto p : {Provenance::paper, Provenance::trivial, Provenance::derived})
    CHECK(parse_provenance(provenance_name(p)) == p);
  CHECK_THROWS(parse_provenance("GUESS"));
}

TEST_CASE("every checkpoint resolves to an anchor and passes") {
  // run_scenario throws AnchorMissing on a dangling id, so a report means all resolved
  auto r = run_scenario("all", base());
  CHECK(r.checkpoints.size() > 80);
  std::set<std::string> ids;
  for (const auto& c : r.checkpoints) {
    CHECK_MESSAGE(c.pass, c.id << ": expected " << c.expected << ", got " << c.actual);
    CHECK_MESSAGE(ids.insert(c.id).second, "duplicate id " << c.id);
    CHECK(!c.anchor.key.empty());
    CHECK(c.id.rfind(c.anchor.key, 0) == 0);
  }
}

TEST_CASE("run all is deterministic") {
  auto a = to_jsonl(run_scenario("all", base()));
  auto cfg = base();
  cfg.parallel = false;
  auto b = to_jsonl(run_scenario("all", cfg));
  CHECK(a == b);
  // timings are opt-in
  CHECK(a.find("\"ms\"") == std::string::npos);
}

TEST_CASE("report lines parse as JSON with the documented kinds") {
  auto r = run_scenario("three-dim", base());
  std::istringstream in(to_jsonl(r, true));
  std::string line;
  std::vector<std::string> kinds;
  while (std::getline(in, line)) {
    auto j = nlohmann::json::parse(line);
    kinds.push_back(j.at("type"));
    if (kinds.back() == "checkpoint") {
      CHECK(j.contains("ms"));
      CHECK(j.at("anchor").contains("quote"));
    }
  }
  REQUIRE(kinds.size() == r.checkpoints.size() + 2);
  CHECK(kinds.front() == "config");
  CHECK(kinds.back() == "summary");
}

TEST_CASE("bad names and configs are rejected") {
  CHECK_THROWS_AS(run_scenario("case-z", base()), UnknownScenario);
  auto c = base();
  c.d = 9;
  CHECK_THROWS_AS(run_scenario("hill", c), std::invalid_argument);
  c = base();
  c.tol = 0;
  CHECK_THROWS_AS(run_scenario("case-c", c), std::invalid_argument);
}

TEST_CASE("hill with d = 2, m = 1 is a single trivial tiling") {
  auto c = base();
  c.d = 2;
  c.m = 1;
  auto r = run_scenario("hill", c);
  CHECK(r.ok());
  int trivial = 0;
  for (const auto& ck : r.checkpoints) trivial += ck.anchor.provenance == Provenance::trivial;
  CHECK(trivial == 2);
}

TEST_CASE("figures: stable names, one SVG each, none for an empty report") {
  auto r = run_scenario("case-b", base());
  std::set<std::string> names;
  for (const auto& f : r.figures) names.insert(f.name);
  CHECK(names.count("case_b_beta_beta_2_alpha_2_alpha"));
  for (const auto& f : r.figures)
    if (f.name == "case_b_beta_beta_2_alpha_2_alpha") CHECK(f.tiling.tiles.size() == 5);

  auto dir = scratch("figs");
  auto files = emit_figures(r, dir);
  CHECK(files.size() == r.figures.size());
  for (const auto& p : files) {
    std::ifstream in(p);
    std::string head;
    std::getline(in, head);
    CHECK(head.find("<svg") != std::string::npos);
  }
  std::filesystem::remove_all(dir);

  auto empty = run_scenario("three-dim", base());
  auto none = scratch("none");
  CHECK(emit_figures(empty, none).empty());
  CHECK(!std::filesystem::exists(none));
  CHECK_THROWS_AS(emit_figures(r, "/proc/reptile/figs"), std::runtime_error);
}

TEST_CASE("case-c figures include the two- and three-tile rows for pi/4") {
  auto r = run_scenario("case-c", base());
  std::set<std::size_t> sizes;
  for (const auto& f : r.figures)
    if (f.name.rfind("case_c_pi4_", 0) == 0) sizes.insert(f.tiling.tiles.size());
  CHECK(sizes.count(2));
  CHECK(sizes.count(3));
}

TEST_CASE("table counts agree with brute force over colorings") {
  auto c = derive_edge_counts({0, 0, 1}, {0, 2, 3});
  REQUIRE(c.size() == 1);
  CHECK(c[0] == std::array<int, 4>{4, 2, 2, 2});
}
