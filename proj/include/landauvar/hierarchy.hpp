#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "landauvar/landau.hpp"

namespace lv {

// Whether Var_target o Var_source may be nonzero: simple_K(target) must lie
// in type_K(source), simple_J(source) in type_J(target), and for pairs of
// simple pinches the linear and odd-parity refinements must not veto it.
bool compatible(const LandauComponent& target, const LandauComponent& source);

// Directed graph with an edge a -> b whenever compatible(b, a).  Edges are
// stored as node-index pairs, so iteration order follows the node list.
struct HierarchyRelation {
  std::vector<std::string> nodes;
  std::set<std::pair<std::size_t, std::size_t>> edges;

  std::size_t index(const std::string& id) const;
  bool has_edge(const std::string& from, const std::string& to) const;
  // Pairs (a, b) joined by a directed path of length >= 1.
  std::set<std::pair<std::string, std::string>> reachability() const;
  std::vector<std::pair<std::string, std::string>> edge_list() const;

  nlohmann::json to_json() const;
  static HierarchyRelation from_json(const nlohmann::json& j);
};

HierarchyRelation hierarchy_graph(const std::vector<LandauComponent>& comps);

// DOT digraph; node labels carry the id and the type sets.
std::string to_dot(const HierarchyRelation& rel, const std::vector<LandauComponent>& comps);

struct Verdict {
  bool forced_zero = false;
  std::string reason;  // empty when unconstrained
};

// Words are in application order: word[0] is applied first.
Verdict word_vanishes(const HierarchyRelation& rel, const std::vector<LandauComponent>& comps,
                      const std::vector<std::string>& word);

}  // namespace lv
