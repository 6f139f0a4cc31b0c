#include "reptile/scenarios/report.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace reptile::scenarios {

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::paper:
      return "PAPER";
    case Provenance::trivial:
      return "TRIVIAL";
    case Provenance::derived:
      return "DERIVED";
  }
  return "?";
}

Provenance parse_provenance(const std::string& s) {
  if (s == "PAPER") return Provenance::paper;
  if (s == "TRIVIAL") return Provenance::trivial;
  if (s == "DERIVED") return Provenance::derived;
  throw std::invalid_argument("unknown provenance: " + s);
}

AnchorTable AnchorTable::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot read " + file.string());
  auto j = nlohmann::json::parse(in);
  AnchorTable t;
  for (const auto& [id, a] : j.at("anchors").items()) {
    Anchor x;
    x.key = id;
    x.provenance = parse_provenance(a.at("provenance").get<std::string>());
    x.source = a.value("source", "");
    x.quote = a.value("quote", "");
    t.anchors_[id] = std::move(x);
  }
  return t;
}

const Anchor& AnchorTable::at(const std::string& id) const {
  // most specific entry wins: "hill.h1.d2.m1", then "hill.h1.d2", then "hill.h1"
  std::string key = id;
  while (true) {
    auto it = anchors_.find(key);
    if (it != anchors_.end()) return it->second;
    auto dot = key.rfind('.');
    if (dot == std::string::npos) break;
    key.resize(dot);
  }
  throw AnchorMissing("no anchor for checkpoint " + id);
}

nlohmann::json Config::to_json() const {
  nlohmann::json j;
  j["tol"] = tol;
  j["coeff_bound"] = coeff_bound;
  j["node_budget"] = node_budget;
  j["fiedler_tol"] = fiedler_tol;
  j["d"] = d ? nlohmann::json(*d) : nlohmann::json(nullptr);
  j["m"] = m ? nlohmann::json(*m) : nlohmann::json(nullptr);
  return j;
}

std::size_t Report::failed() const {
  return std::count_if(checkpoints.begin(), checkpoints.end(), [](const Checkpoint& c) { return !c.pass; });
}

void Report::merge(Report other) {
  for (auto& c : other.checkpoints) checkpoints.push_back(std::move(c));
  for (auto& f : other.figures) figures.push_back(std::move(f));
  total_ms += other.total_ms;
}

std::string to_jsonl(const Report& r, bool timings) {
  std::ostringstream out;
  nlohmann::json head{{"type", "config"}, {"scenario", r.scenario}, {"config", r.config.to_json()}};
  out << head.dump() << '\n';
  for (const auto& c : r.checkpoints) {
    nlohmann::json j{{"type", "checkpoint"},
                     {"id", c.id},
                     {"description", c.description},
                     {"expected", c.expected},
                     {"provenance", provenance_name(c.anchor.provenance)},
                     {"actual", c.actual},
                     {"pass", c.pass},
                     {"anchor", {{"key", c.anchor.key}, {"source", c.anchor.source}, {"quote", c.anchor.quote}}}};
    if (timings) j["ms"] = c.ms;
    out << j.dump() << '\n';
  }
  std::vector<std::string> figs;
  for (const auto& f : r.figures) figs.push_back(f.name);
  nlohmann::json tail{{"type", "summary"},
                      {"scenario", r.scenario},
                      {"checkpoints", r.checkpoints.size()},
                      {"failed", r.failed()},
                      {"figures", figs},
                      {"pass", r.ok()}};
  if (timings) tail["ms"] = r.total_ms;
  out << tail.dump() << '\n';
  return out.str();
}

std::string summary_table(const Report& r, bool timings) {
  std::size_t w_id = 2, w_exp = 8;
  for (const auto& c : r.checkpoints) {
    w_id = std::max(w_id, c.id.size());
    w_exp = std::max(w_exp, std::min<std::size_t>(c.expected.size(), 40));
  }
  auto clip = [](const std::string& s, std::size_t n) { return s.size() <= n ? s : s.substr(0, n - 3) + "..."; };
  std::ostringstream out;
  out << std::left << std::setw(6) << "" << std::setw(w_id + 2) << "id" << std::setw(9) << "source"
      << std::setw(w_exp + 2) << "expected"
      << "actual\n";
  for (const auto& c : r.checkpoints) {
    out << std::setw(6) << (c.pass ? "pass" : "FAIL") << std::setw(w_id + 2) << c.id << std::setw(9)
        << provenance_name(c.anchor.provenance) << std::setw(w_exp + 2) << clip(c.expected, 40) << clip(c.actual, 60);
    if (timings) out << "  (" << std::fixed << std::setprecision(1) << c.ms << " ms)";
    out << '\n';
  }
  out << r.scenario << ": " << r.checkpoints.size() - r.failed() << "/" << r.checkpoints.size() << " passed";
  if (timings) out << " in " << std::fixed << std::setprecision(1) << r.total_ms / 1000 << " s";
  out << '\n';
  return out.str();
}

std::vector<std::filesystem::path> emit_figures(const Report& r, const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> written;
  if (r.figures.empty()) return written;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());
  for (const auto& f : r.figures) {
    auto path = dir / (f.name + ".svg");
    std::ofstream out(path);
    out << realize::to_svg(f.tiling, f.title);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    written.push_back(path);
  }
  return written;
}

}  // namespace reptile::scenarios
