#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "reptile/realize/tiling.hpp"

namespace reptile::scenarios {

/// Where an expected value comes from.
enum class Provenance { paper, trivial, derived };

const char* provenance_name(Provenance p);  // "PAPER", "TRIVIAL", "DERIVED"
Provenance parse_provenance(const std::string& s);

struct Anchor {
  std::string key;  // fixture entry the checkpoint resolved to
  Provenance provenance = Provenance::derived;
  std::string source;
  std::string quote;
};

struct AnchorMissing : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Checkpoint id -> anchor, read from fixtures/anchors.json.
class AnchorTable {
 public:
  AnchorTable() = default;
  static AnchorTable load(const std::filesystem::path& file);

  /// Entry for id, falling back to its dotted prefixes. Throws AnchorMissing.
  const Anchor& at(const std::string& id) const;
  const std::map<std::string, Anchor>& all() const { return anchors_; }

 private:
  std::map<std::string, Anchor> anchors_;
};

struct Checkpoint {
  std::string id;
  std::string description;
  std::string expected;
  std::string actual;
  bool pass = false;
  Anchor anchor;
  double ms = 0;  // time since the previous checkpoint
};

struct Config {
  double tol = 1e-5;  // edge-combination matching
  int coeff_bound = 20;
  std::uint64_t node_budget = 1000000;
  double fiedler_tol = 1e-9;
  std::optional<int> d;  // hill: a single dimension / scale instead of the full grid
  std::optional<int> m;
  std::filesystem::path fixture_dir;
  bool parallel = true;  // `all` runs scenarios on separate threads

  nlohmann::json to_json() const;
};

struct Figure {
  std::string name;  // file stem
  std::string title;
  realize::SphTiling tiling;
};

struct Report {
  std::string scenario;
  Config config;
  std::vector<Checkpoint> checkpoints;
  std::vector<Figure> figures;
  double total_ms = 0;

  std::size_t failed() const;
  bool ok() const { return failed() == 0; }
  /// Appends another report's checkpoints and figures.
  void merge(Report other);
};

/// One JSON object per line: a config header, every checkpoint, a summary.
/// Timings are left out unless asked for, so equal configs give equal bytes.
std::string to_jsonl(const Report& r, bool timings = false);
std::string summary_table(const Report& r, bool timings = true);

/// Writes <name>.svg for every figure; returns the paths written. Throws
/// std::runtime_error when the directory cannot be created or written.
std::vector<std::filesystem::path> emit_figures(const Report& r, const std::filesystem::path& dir);

}  // namespace reptile::scenarios
