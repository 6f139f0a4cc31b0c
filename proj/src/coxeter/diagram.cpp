#include "reptile/coxeter/diagram.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <stdexcept>

namespace reptile::coxeter {

TriangleType::TriangleType(AngleForm a, AngleForm b, AngleForm c, const RelationSet& r)
    : labels{r.normalize(a), r.normalize(b), r.normalize(c)} {
  std::sort(labels.begin(), labels.end());
}

TriangleType TriangleType::parse(const std::string& text, const RelationSet& r) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(), [](char ch) { return ch == '(' || ch == ')'; }), s.end());
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == ',') {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  if (parts.size() != 3) throw std::invalid_argument("TriangleType: expected three labels in '" + text + "'");
  return TriangleType(angles::parse_angle(parts[0]), angles::parse_angle(parts[1]), angles::parse_angle(parts[2]), r);
}

bool TriangleType::contains(const AngleForm& f) const {
  return std::find(labels.begin(), labels.end(), f) != labels.end();
}

std::string TriangleType::to_string() const {
  return "(" + labels[0].to_string() + ", " + labels[1].to_string() + ", " + labels[2].to_string() + ")";
}

CoxeterDiagram::CoxeterDiagram(int n, std::vector<AngleForm> labels, RelationSet r)
    : n_(n), labels_(std::move(labels)), r_(std::move(r)) {
  if (n < 2) throw std::invalid_argument("CoxeterDiagram: need at least two vertices");
  if (static_cast<int>(labels_.size()) != edge_count(n))
    throw std::invalid_argument("CoxeterDiagram: expected " + std::to_string(edge_count(n)) + " labels");
  for (auto& f : labels_) f = r_.normalize(f);
  for (int v = 0; v < n; ++v) names_.push_back(n <= 5 ? std::string(1, "uvwxy"[v]) : "F" + std::to_string(v + 1));
}

void CoxeterDiagram::set_label(int i, int j, const AngleForm& f) { labels_[edge_index(i, j)] = r_.normalize(f); }

void CoxeterDiagram::set_names(std::vector<std::string> names) {
  if (static_cast<int>(names.size()) != n_) throw std::invalid_argument("CoxeterDiagram: wrong number of names");
  names_ = std::move(names);
}

int CoxeterDiagram::vertex(const std::string& name) const {
  for (int v = 0; v < n_; ++v)
    if (names_[v] == name) return v;
  throw std::invalid_argument("CoxeterDiagram: unknown vertex '" + name + "'");
}

std::vector<AngleForm> CoxeterDiagram::alphabet() const {
  std::set<AngleForm> s(labels_.begin(), labels_.end());
  return {s.begin(), s.end()};
}

ColorGraph CoxeterDiagram::colors() const {
  auto a = alphabet();
  std::vector<int> c;
  for (const auto& f : labels_) c.push_back(static_cast<int>(std::lower_bound(a.begin(), a.end(), f) - a.begin()));
  return ColorGraph(n_, c);
}

TriangleType CoxeterDiagram::triangle_type(int i, int j, int k) const {
  return TriangleType(label(i, j), label(i, k), label(j, k));
}

std::vector<Subset> CoxeterDiagram::triangles_of_type(const TriangleType& t) const {
  TriangleType tn(t.labels[0], t.labels[1], t.labels[2], r_);
  std::vector<Subset> out;
  for (const auto& s : triangles())
    if (triangle_type(s[0], s[1], s[2]) == tn) out.push_back(s);
  return out;
}

std::vector<Subset> CoxeterDiagram::edges_with_label(const AngleForm& f) const {
  AngleForm g = r_.normalize(f);
  std::vector<Subset> out;
  for (const auto& e : all_subsets(n_, 2))
    if (label(e[0], e[1]) == g) out.push_back(e);
  return out;
}

std::string CoxeterDiagram::edge_name(int i, int j) const {
  if (i > j) std::swap(i, j);
  bool short_names = names_[i].size() == 1 && names_[j].size() == 1;
  return names_[i] + (short_names ? "" : "-") + names_[j];
}

AutGroup automorphisms(const CoxeterDiagram& d) { return automorphisms(d.colors()); }

namespace {

std::vector<std::vector<Subset>> orbits_of(const CoxeterDiagram& d, const std::vector<Subset>& items) {
  auto g = automorphisms(d);
  std::vector<std::vector<Subset>> out;
  for (const auto& orb : orbit_partition(g, items)) {
    std::vector<Subset> o;
    for (auto i : orb) o.push_back(items[i]);
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace

std::vector<std::vector<Subset>> vertex_orbits(const CoxeterDiagram& d) { return orbits_of(d, all_subsets(d.size(), 1)); }

std::vector<std::vector<Subset>> edge_orbits(const CoxeterDiagram& d, const std::optional<AngleForm>& label) {
  return orbits_of(d, label ? d.edges_with_label(*label) : all_subsets(d.size(), 2));
}

std::vector<std::vector<Subset>> triangle_orbits(const CoxeterDiagram& d, const std::optional<TriangleType>& type) {
  return orbits_of(d, type ? d.triangles_of_type(*type) : d.triangles());
}

bool is_rich(const CoxeterDiagram& d, const TriangleType& t) {
  if (d.count(t) < 4) return false;
  return triangle_orbits(d, t).size() >= 4;
}

std::string label_subgraph(const CoxeterDiagram& d, const AngleForm& f) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : d.edges_with_label(f)) edges.emplace_back(e[0], e[1]);
  return classify_graph(d.size(), edges);
}

std::vector<int> canonical_form(const CoxeterDiagram& d) { return canonical_form(d.colors()); }

RelationSet relations_from_json(const nlohmann::json& j) {
  RelationSet r;
  if (j.is_null()) return r;
  for (auto it = j.begin(); it != j.end(); ++it) {
    auto sym = angles::parse_angle(it.key());
    angles::Symbol s;
    if (sym == AngleForm::alpha()) s = angles::Symbol::alpha;
    else if (sym == AngleForm::beta()) s = angles::Symbol::beta;
    else if (sym == AngleForm::gamma()) s = angles::Symbol::gamma;
    else throw angles::RelationError("relations: '" + it.key() + "' is not a symbol");
    r.add(s, it.value().get<std::string>());
  }
  return r;
}

nlohmann::json to_json(const RelationSet& r) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [s, rhs] : r.rules()) j[angles::symbol_name(s)] = rhs.to_string();
  return j;
}

CoxeterDiagram diagram_from_json(const nlohmann::json& j) {
  std::vector<std::string> names = j.at("vertices").get<std::vector<std::string>>();
  int n = static_cast<int>(names.size());
  RelationSet r = relations_from_json(j.value("relations", nlohmann::json()));
  auto index = [&](const std::string& s) {
    auto it = std::find(names.begin(), names.end(), s);
    if (it == names.end()) throw std::invalid_argument("diagram: unknown vertex '" + s + "'");
    return static_cast<int>(it - names.begin());
  };
  std::vector<std::optional<AngleForm>> got(edge_count(n));
  for (auto it = j.at("labels").begin(); it != j.at("labels").end(); ++it) {
    const std::string& key = it.key();
    std::string a, b;
    if (auto dash = key.find('-'); dash != std::string::npos) {
      a = key.substr(0, dash);
      b = key.substr(dash + 1);
    } else if (key.size() == 2) {
      a = key.substr(0, 1);
      b = key.substr(1, 1);
    } else {
      throw std::invalid_argument("diagram: bad edge key '" + key + "'");
    }
    int u = index(a), v = index(b);
    if (u == v) throw std::invalid_argument("diagram: loop '" + key + "'");
    int e = edge_index(u, v);
    if (got[e]) throw std::invalid_argument("diagram: edge '" + key + "' labeled twice");
    got[e] = angles::parse_angle(it.value().get<std::string>());
  }
  std::vector<AngleForm> labels;
  for (int e = 0; e < edge_count(n); ++e) {
    if (!got[e]) {
      auto [u, v] = edge_ends(e);
      throw std::invalid_argument("diagram: edge " + names[u] + names[v] + " has no label");
    }
    labels.push_back(*got[e]);
  }
  CoxeterDiagram d(n, labels, r);
  d.set_names(names);
  return d;
}

nlohmann::json to_json(const CoxeterDiagram& d) {
  nlohmann::json labels = nlohmann::json::object();
  for (int j = 1; j < d.size(); ++j)
    for (int i = 0; i < j; ++i) labels[d.edge_name(i, j)] = d.label(i, j).to_string();
  return {{"vertices", d.names()}, {"relations", to_json(d.relations())}, {"labels", labels}};
}

CoxeterDiagram load_diagram(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  nlohmann::json j;
  in >> j;
  return diagram_from_json(j);
}

}  // namespace reptile::coxeter
