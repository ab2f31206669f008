#include "landauvar/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "landauvar/error.hpp"

namespace lv {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

std::set<std::string> split_channel_key(const std::string& key) {
  std::set<std::string> out;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, '+')) {
    auto b = part.find_first_not_of(" \t");
    auto e = part.find_last_not_of(" \t");
    if (b == std::string::npos) throw Error("empty momentum in channel key '" + key + "'");
    out.insert(part.substr(b, e - b + 1));
  }
  return out;
}

std::string join_channel_key(const std::set<std::string>& s) {
  std::string out;
  for (const auto& p : s) out += (out.empty() ? "" : "+") + p;
  return out;
}

struct WorkEdge {
  std::size_t index;
  std::size_t a, b;
};

void deletion_contraction(std::vector<WorkEdge> edges, std::size_t nverts, std::size_t universe,
                          EdgeSet& chosen, std::vector<EdgeSet>& out) {
  if (nverts == 1) {
    EdgeSet t = chosen;
    std::sort(t.begin(), t.end());
    out.push_back(std::move(t));
    return;
  }
  std::erase_if(edges, [](const WorkEdge& e) { return e.a == e.b; });
  if (edges.size() < nverts - 1) return;
  WorkEdge e = edges.back();
  edges.pop_back();

  UnionFind uf(universe);
  std::size_t joined = 0;
  for (const auto& f : edges) joined += uf.unite(f.a, f.b);
  if (joined == nverts - 1) deletion_contraction(edges, nverts, universe, chosen, out);

  for (auto& f : edges) {
    if (f.a == e.b) f.a = e.a;
    if (f.b == e.b) f.b = e.a;
  }
  chosen.push_back(e.index);
  deletion_contraction(std::move(edges), nverts - 1, universe, chosen, out);
  chosen.pop_back();
}

}  // namespace

std::string mass_parameter(const std::string& mass_symbol) { return mass_symbol + "sq"; }

FeynmanGraph FeynmanGraph::from_json(const nlohmann::json& j) {
  FeynmanGraph g;
  try {
    for (const auto& v : j.at("vertices")) g.vertices.push_back(v.get<std::string>());
    for (const auto& je : j.at("edges")) {
      Edge e;
      e.id = je.at("id").get<std::string>();
      const auto& ends = je.at("ends");
      if (!ends.is_array() || ends.size() != 2) throw Error("edge '" + e.id + "' needs two ends");
      e.u = ends[0].get<std::string>();
      e.v = ends[1].get<std::string>();
      if (je.contains("mass") && !je["mass"].is_null()) e.mass = je["mass"].get<std::string>();
      e.var = je.at("var").get<std::string>();
      g.edges.push_back(std::move(e));
    }
    if (j.contains("legs"))
      for (const auto& jl : j["legs"])
        g.legs.push_back({jl.at("vertex").get<std::string>(), jl.at("momentum").get<std::string>()});
    if (j.contains("channels"))
      for (const auto& [key, val] : j["channels"].items())
        g.channels[split_channel_key(key)] = Polynomial::parse(val.get<std::string>());
  } catch (const nlohmann::json::exception& ex) {
    throw Error(std::string("malformed graph JSON: ") + ex.what());
  }

  std::set<std::string> vs(g.vertices.begin(), g.vertices.end());
  if (vs.size() != g.vertices.size()) throw Error("duplicate vertex id");
  if (g.vertices.empty()) throw Error("graph has no vertices");
  std::set<std::string> ids, vars;
  for (const auto& e : g.edges) {
    if (!ids.insert(e.id).second) throw Error("duplicate edge id '" + e.id + "'");
    if (!vars.insert(e.var).second) throw Error("duplicate edge variable '" + e.var + "'");
    if (!vs.count(e.u) || !vs.count(e.v)) throw Error("edge '" + e.id + "' has an unknown end");
  }
  std::set<std::string> moms;
  for (const auto& l : g.legs) {
    if (!vs.count(l.vertex)) throw Error("leg '" + l.momentum + "' at unknown vertex");
    if (!moms.insert(l.momentum).second) throw Error("duplicate momentum '" + l.momentum + "'");
  }
  for (const auto& [key, val] : g.channels)
    for (const auto& p : key)
      if (!moms.count(p)) throw Error("channel mentions unknown momentum '" + p + "'");
  if (!g.connected()) throw Error("graph is disconnected");
  return g;
}

FeynmanGraph FeynmanGraph::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& ex) {
    throw Error(path + ": " + ex.what());
  }
  return from_json(j);
}

nlohmann::json FeynmanGraph::to_json() const {
  nlohmann::json j;
  j["vertices"] = vertices;
  j["edges"] = nlohmann::json::array();
  for (const auto& e : edges) {
    nlohmann::json je{{"id", e.id}, {"ends", {e.u, e.v}}, {"var", e.var}};
    je["mass"] = e.mass ? nlohmann::json(*e.mass) : nlohmann::json(nullptr);
    j["edges"].push_back(je);
  }
  j["legs"] = nlohmann::json::array();
  for (const auto& l : legs) j["legs"].push_back({{"vertex", l.vertex}, {"momentum", l.momentum}});
  j["channels"] = nlohmann::json::object();
  for (const auto& [key, val] : channels) j["channels"][join_channel_key(key)] = val.str();
  return j;
}

int FeynmanGraph::loop_number() const {
  return static_cast<int>(edges.size()) - static_cast<int>(vertices.size()) + 1;
}

bool FeynmanGraph::connected() const {
  UnionFind uf(vertices.size());
  std::size_t joined = 0;
  for (const auto& e : edges) {
    auto a = std::find(vertices.begin(), vertices.end(), e.u) - vertices.begin();
    auto b = std::find(vertices.begin(), vertices.end(), e.v) - vertices.begin();
    joined += uf.unite(a, b);
  }
  return joined + 1 == vertices.size();
}

std::size_t FeynmanGraph::edge_index(const std::string& id) const {
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (edges[i].id == id) return i;
  throw Error("unknown edge '" + id + "'");
}

std::vector<std::string> FeynmanGraph::edge_vars() const {
  std::vector<std::string> out;
  for (const auto& e : edges) out.push_back(e.var);
  return out;
}

Polynomial FeynmanGraph::mass_squared(const Edge& e) const {
  if (!e.mass) return Polynomial();
  return Polynomial::variable(mass_parameter(*e.mass));
}

Polynomial FeynmanGraph::cut_invariant(const std::set<std::string>& side) const {
  std::set<std::string> in, out;
  for (const auto& l : legs) (side.count(l.vertex) ? in : out).insert(l.momentum);
  if (in.empty() || out.empty()) return Polynomial();
  if (auto it = channels.find(in); it != channels.end()) return it->second;
  if (auto it = channels.find(out); it != channels.end()) return it->second;
  throw Error("missing invariant for channel " + join_channel_key(in));
}

std::vector<EdgeSet> spanning_trees(const FeynmanGraph& g) {
  if (!g.connected()) throw Error("spanning trees of a disconnected graph");
  std::vector<WorkEdge> work;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    auto a = std::find(g.vertices.begin(), g.vertices.end(), g.edges[i].u) - g.vertices.begin();
    auto b = std::find(g.vertices.begin(), g.vertices.end(), g.edges[i].v) - g.vertices.begin();
    work.push_back({i, static_cast<std::size_t>(a), static_cast<std::size_t>(b)});
  }
  std::vector<EdgeSet> out;
  EdgeSet chosen;
  deletion_contraction(std::move(work), g.vertices.size(), g.vertices.size(), chosen, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EdgeSet> spanning_2forests(const FeynmanGraph& g) {
  std::set<EdgeSet> forests;
  for (const auto& t : spanning_trees(g))
    for (std::size_t k = 0; k < t.size(); ++k) {
      EdgeSet f = t;
      f.erase(f.begin() + k);
      forests.insert(std::move(f));
    }
  return {forests.begin(), forests.end()};
}

namespace {

Polynomial complement_monomial(const FeynmanGraph& g, const EdgeSet& s) {
  Polynomial m(1);
  for (std::size_t i = 0; i < g.edges.size(); ++i)
    if (!std::binary_search(s.begin(), s.end(), i)) m *= Polynomial::variable(g.edges[i].var);
  return m;
}

}  // namespace

Polynomial symanzik_U(const FeynmanGraph& g) {
  Polynomial u;
  for (const auto& t : spanning_trees(g)) u += complement_monomial(g, t);
  return u;
}

Polynomial symanzik_F(const FeynmanGraph& g) {
  Polynomial f0;
  for (const auto& f : spanning_2forests(g)) {
    UnionFind uf(g.vertices.size());
    for (auto i : f) {
      auto a = std::find(g.vertices.begin(), g.vertices.end(), g.edges[i].u) - g.vertices.begin();
      auto b = std::find(g.vertices.begin(), g.vertices.end(), g.edges[i].v) - g.vertices.begin();
      uf.unite(a, b);
    }
    std::set<std::string> side;
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
      if (uf.find(v) == uf.find(0)) side.insert(g.vertices[v]);
    Polynomial inv = g.cut_invariant(side);
    if (!inv.is_zero()) f0 -= inv * complement_monomial(g, f);
  }
  Polynomial masses;
  for (const auto& e : g.edges) masses += g.mass_squared(e) * Polynomial::variable(e.var);
  return f0 + symanzik_U(g) * masses;
}

FeynmanGraph contract(const FeynmanGraph& g, const std::set<std::string>& edge_ids) {
  if (edge_ids.empty()) return g;
  for (const auto& id : edge_ids) {
    const Edge& e = g.edges[g.edge_index(id)];
    if (e.u == e.v) throw Error("cannot contract self-loop '" + id + "'");
  }
  if (edge_ids.size() == g.edges.size()) throw Error("cannot contract every edge of the graph");

  auto vidx = [&](const std::string& v) {
    return static_cast<std::size_t>(std::find(g.vertices.begin(), g.vertices.end(), v) -
                                    g.vertices.begin());
  };
  UnionFind uf(g.vertices.size());
  for (const auto& e : g.edges)
    if (edge_ids.count(e.id)) uf.unite(vidx(e.u), vidx(e.v));

  FeynmanGraph q;
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    if (uf.find(v) == v) q.vertices.push_back(g.vertices[v]);
  auto rep = [&](const std::string& v) { return g.vertices[uf.find(vidx(v))]; };
  for (const auto& e : g.edges) {
    if (edge_ids.count(e.id)) continue;
    Edge ne = e;
    ne.u = rep(e.u);
    ne.v = rep(e.v);
    q.edges.push_back(ne);
  }
  for (const auto& l : g.legs) q.legs.push_back({rep(l.vertex), l.momentum});
  q.channels = g.channels;
  return q;
}

}  // namespace lv

namespace lv {

std::vector<std::set<std::string>> components(const FeynmanGraph& g, const EdgeSet& kept) {
  UnionFind uf(g.vertices.size());
  auto vidx = [&](const std::string& v) {
    return static_cast<std::size_t>(std::find(g.vertices.begin(), g.vertices.end(), v) -
                                    g.vertices.begin());
  };
  for (auto i : kept) uf.unite(vidx(g.edges.at(i).u), vidx(g.edges.at(i).v));
  std::map<std::size_t, std::set<std::string>> by_root;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) by_root[uf.find(v)].insert(g.vertices[v]);
  std::vector<std::set<std::string>> out;
  for (auto& [r, s] : by_root) out.push_back(std::move(s));
  return out;
}

namespace {

nlohmann::json graph_source(const std::string& name) {
  using nlohmann::json;
  auto edge = [](const char* id, const char* a, const char* b, const char* mass, const char* var) {
    json e{{"id", id}, {"ends", {a, b}}, {"var", var}};
    e["mass"] = mass ? json(mass) : json(nullptr);
    return e;
  };
  auto legs = [](std::initializer_list<std::pair<const char*, const char*>> l) {
    json out = json::array();
    for (auto [v, p] : l) out.push_back({{"vertex", v}, {"momentum", p}});
    return out;
  };
  if (name == "bubble")
    return {{"vertices", {"v1", "v2"}},
            {"edges", {edge("e1", "v1", "v2", "m1", "x1"), edge("e2", "v1", "v2", "m2", "x2")}},
            {"legs", legs({{"v1", "p1"}, {"v2", "p2"}})},
            {"channels", {{"p1", "p1sq"}}}};
  if (name == "triangle" || name == "massless-triangle") {
    bool massive = name == "triangle";
    return {{"vertices", {"v1", "v2", "v3"}},
            {"edges",
             {edge("e1", "v2", "v3", massive ? "m1" : nullptr, "x1"),
              edge("e2", "v1", "v3", massive ? "m2" : nullptr, "x2"),
              edge("e3", "v1", "v2", massive ? "m3" : nullptr, "x3")}},
            {"legs", legs({{"v1", "p1"}, {"v2", "p2"}, {"v3", "p3"}})},
            {"channels", {{"p1", "p1sq"}, {"p2", "p2sq"}, {"p3", "p3sq"}}}};
  }
  if (name == "sunrise")
    return {{"vertices", {"v1", "v2"}},
            {"edges",
             {edge("e1", "v1", "v2", "m1", "x1"), edge("e2", "v1", "v2", "m2", "x2"),
              edge("e3", "v1", "v2", "m3", "x3")}},
            {"legs", legs({{"v1", "p1"}, {"v2", "p2"}})},
            {"channels", {{"p1", "psq"}}}};
  if (name == "icecream")
    return {{"vertices", {"v0", "v1", "v2"}},
            {"edges",
             {edge("e1", "v1", "v2", "m1", "x1"), edge("e2", "v1", "v2", "m2", "x2"),
              edge("e3", "v0", "v2", "m3", "x3"), edge("e4", "v0", "v1", "m4", "x4")}},
            {"legs", legs({{"v0", "p1"}, {"v1", "p2"}, {"v2", "p3"}})},
            {"channels", {{"p1", "p1sq"}, {"p2", "p2sq"}, {"p3", "p3sq"}}}};
  if (name == "tadpole")
    return {{"vertices", {"v1"}},
            {"edges", {edge("e1", "v1", "v1", "m1", "x1")}},
            {"legs", json::array()},
            {"channels", json::object()}};
  if (name == "box")
    return {{"vertices", {"v1", "v2", "v3", "v4"}},
            {"edges",
             {edge("e1", "v1", "v2", "m1", "x1"), edge("e2", "v2", "v3", "m2", "x2"),
              edge("e3", "v3", "v4", "m3", "x3"), edge("e4", "v4", "v1", "m4", "x4")}},
            {"legs", legs({{"v1", "p1"}, {"v2", "p2"}, {"v3", "p3"}, {"v4", "p4"}})},
            {"channels",
             {{"p1", "p1sq"}, {"p2", "p2sq"}, {"p3", "p3sq"}, {"p4", "p4sq"}, {"p1+p2", "s"},
              {"p2+p3", "t"}}}};
  throw Error("unknown builtin graph '" + name + "'");
}

}  // namespace

FeynmanGraph builtin_graph(const std::string& name) {
  return FeynmanGraph::from_json(graph_source(name));
}

std::vector<std::string> builtin_graph_names() {
  return {"bubble", "box", "icecream", "massless-triangle", "sunrise", "tadpole", "triangle"};
}

}  // namespace lv
