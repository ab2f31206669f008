#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "landauvar/polynomial.hpp"

namespace lv {

struct Edge {
  std::string id;
  std::string u, v;
  std::optional<std::string> mass;  // mass symbol m; the parameter is m + "sq"
  std::string var;                  // Schwinger parameter x_e
};

struct Leg {
  std::string vertex;
  std::string momentum;
};

// Multigraph with masses, external legs and a channel dictionary mapping
// sets of external momenta to invariant polynomials (usually one symbol).
class FeynmanGraph {
 public:
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
  std::vector<Leg> legs;
  std::map<std::set<std::string>, Polynomial> channels;

  static FeynmanGraph from_json(const nlohmann::json& j);
  static FeynmanGraph load(const std::string& path);
  nlohmann::json to_json() const;

  int loop_number() const;
  bool connected() const;
  std::size_t edge_index(const std::string& id) const;
  std::vector<std::string> edge_vars() const;
  // m_e^2 parameter of an edge, zero when massless.
  Polynomial mass_squared(const Edge& e) const;
  // Invariant for the momentum flowing through a cut that separates `side`
  // (a set of vertices) from the rest.  Zero when no momentum flows.
  Polynomial cut_invariant(const std::set<std::string>& side) const;
};

using EdgeSet = std::vector<std::size_t>;

// Spanning trees as sorted edge-index lists, by deletion-contraction.
std::vector<EdgeSet> spanning_trees(const FeynmanGraph& g);
// Spanning forests with exactly two trees.
std::vector<EdgeSet> spanning_2forests(const FeynmanGraph& g);

Polynomial symanzik_U(const FeynmanGraph& g);
Polynomial symanzik_F(const FeynmanGraph& g);

// Quotient graph G/I.  Endpoints joined by I are identified and the edges
// of I removed.
FeynmanGraph contract(const FeynmanGraph& g, const std::set<std::string>& edge_ids);

std::string mass_parameter(const std::string& mass_symbol);

// Vertex sets of the connected components of (V, kept edges).
std::vector<std::set<std::string>> components(const FeynmanGraph& g, const EdgeSet& kept);

// Copies of the graphs shipped in data/: bubble, triangle, massless-triangle,
// sunrise, icecream, tadpole, box.
FeynmanGraph builtin_graph(const std::string& name);
std::vector<std::string> builtin_graph_names();

}  // namespace lv
