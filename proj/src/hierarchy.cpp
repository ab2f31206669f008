#include "landauvar/hierarchy.hpp"

#include <algorithm>
#include <sstream>

#include "landauvar/error.hpp"

namespace lv {

namespace {

bool subset(const std::set<std::string>& a, const std::set<std::string>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::string braces(const std::set<std::string>& s) {
  std::string out = "{";
  for (const auto& x : s) out += (out.size() > 1 ? "," : "") + x;
  return out + "}";
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '\\';
    out += c;
  }
  return out + "\"";
}

const LandauComponent& lookup(const std::vector<LandauComponent>& comps, const std::string& id) {
  for (const auto& c : comps)
    if (c.id == id) return c;
  throw Error("unknown component '" + id + "'");
}

}  // namespace

bool compatible(const LandauComponent& target, const LandauComponent& source) {
  if (!subset(target.simple_K, source.type_K)) return false;
  if (!subset(source.simple_J, target.type_J)) return false;
  if (target.simple_pinch() && source.simple_pinch()) {
    if (source.pinch == PinchKind::linear && target.type_K == source.type_K) return false;
    if (target.pinch == PinchKind::linear && target.type_J == source.type_J) return false;
  }
  if (target.id == source.id && source.simple_pinch() && source.parity && *source.parity % 2 != 0)
    return false;
  return true;
}

std::size_t HierarchyRelation::index(const std::string& id) const {
  auto it = std::find(nodes.begin(), nodes.end(), id);
  if (it == nodes.end()) throw Error("unknown component '" + id + "'");
  return static_cast<std::size_t>(it - nodes.begin());
}

bool HierarchyRelation::has_edge(const std::string& from, const std::string& to) const {
  return edges.count({index(from), index(to)}) > 0;
}

std::set<std::pair<std::string, std::string>> HierarchyRelation::reachability() const {
  const std::size_t n = nodes.size();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (auto [a, b] : edges) r[a][b] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (r[k][j]) r[i][j] = true;
  std::set<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (r[i][j]) out.insert({nodes[i], nodes[j]});
  return out;
}

std::vector<std::pair<std::string, std::string>> HierarchyRelation::edge_list() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (auto [a, b] : edges) out.push_back({nodes[a], nodes[b]});
  return out;
}

nlohmann::json HierarchyRelation::to_json() const {
  nlohmann::json j;
  j["nodes"] = nodes;
  j["edges"] = nlohmann::json::array();
  for (const auto& [a, b] : edge_list()) j["edges"].push_back({a, b});
  return j;
}

HierarchyRelation HierarchyRelation::from_json(const nlohmann::json& j) {
  HierarchyRelation rel;
  try {
    rel.nodes = j.at("nodes").get<std::vector<std::string>>();
    for (const auto& e : j.at("edges")) {
      auto pair = e.get<std::vector<std::string>>();
      if (pair.size() != 2) throw Error("hierarchy edge needs two ends");
      rel.edges.insert({rel.index(pair[0]), rel.index(pair[1])});
    }
  } catch (const nlohmann::json::exception& ex) {
    throw Error(std::string("malformed hierarchy JSON: ") + ex.what());
  }
  return rel;
}

HierarchyRelation hierarchy_graph(const std::vector<LandauComponent>& comps) {
  HierarchyRelation rel;
  for (const auto& c : comps) {
    if (std::find(rel.nodes.begin(), rel.nodes.end(), c.id) != rel.nodes.end())
      throw Error("duplicate component id '" + c.id + "'");
    rel.nodes.push_back(c.id);
  }
  for (std::size_t a = 0; a < comps.size(); ++a)
    for (std::size_t b = 0; b < comps.size(); ++b)
      if (compatible(comps[b], comps[a])) rel.edges.insert({a, b});
  return rel;
}

std::string to_dot(const HierarchyRelation& rel, const std::vector<LandauComponent>& comps) {
  std::ostringstream out;
  out << "digraph hierarchy {\n";
  for (const auto& id : rel.nodes) {
    const auto& c = lookup(comps, id);
    out << "  " << quoted(id) << " [label="
        << quoted(id + "\\nJ=" + braces(c.type_J) + " K=" + braces(c.type_K)) << "];\n";
  }
  for (const auto& [a, b] : rel.edge_list()) out << "  " << quoted(a) << " -> " << quoted(b) << ";\n";
  out << "}\n";
  return out.str();
}

Verdict word_vanishes(const HierarchyRelation& rel, const std::vector<LandauComponent>& comps,
                      const std::vector<std::string>& word) {
  for (const auto& id : word) {
    rel.index(id);
    if (lookup(comps, id).variation_known_zero)
      return {true, "variation of " + id + " is zero (pure-type linear pinch)"};
  }
  for (std::size_t k = 0; k + 1 < word.size(); ++k)
    if (!rel.has_edge(word[k], word[k + 1]))
      return {true, "no arrow " + word[k] + " -> " + word[k + 1]};
  return {};
}

}  // namespace lv
