#include "doctest.h"
#include "landauvar/error.hpp"
#include "landauvar/graph.hpp"

using lv::FeynmanGraph;
using lv::Polynomial;

namespace {

Polynomial P(const char* s) { return Polynomial::parse(s); }

std::string data(const char* file) { return std::string(LV_DATA_DIR) + "/" + file; }

std::set<std::string> edge_ids(const FeynmanGraph& g) {
  std::set<std::string> out;
  for (const auto& e : g.edges) out.insert(e.id);
  return out;
}

}  // namespace

TEST_CASE("printed Symanzik polynomials") {
  auto bubble = FeynmanGraph::load(data("bubble.json"));
  CHECK(lv::symanzik_U(bubble) == P("x1 + x2"));
  CHECK(lv::symanzik_F(bubble) == P("(x1 + x2)*(m1sq*x1 + m2sq*x2) - p1sq*x1*x2"));

  auto mt = FeynmanGraph::load(data("massless_triangle.json"));
  CHECK(lv::symanzik_U(mt) == P("x1 + x2 + x3"));
  CHECK(lv::symanzik_F(mt) == P("-p1sq*x2*x3 - p2sq*x1*x3 - p3sq*x1*x2"));

  auto sun = FeynmanGraph::load(data("sunrise.json"));
  Polynomial usun = P("x2*x3 + x1*x3 + x1*x2");
  CHECK(lv::symanzik_U(sun) == usun);
  CHECK(lv::symanzik_F(sun) == P("m1sq*x1 + m2sq*x2 + m3sq*x3") * usun - P("psq*x1*x2*x3"));

  auto ice = FeynmanGraph::load(data("icecream.json"));
  Polynomial uice = P("x1*x2 + (x1 + x2)*(x3 + x4)");
  CHECK(lv::symanzik_U(ice) == uice);
  CHECK(lv::symanzik_F(ice) == P("x1*x2*(-p2sq*x4 - p3sq*x3) - p1sq*(x1 + x2)*x3*x4") +
                                   uice * P("m1sq*x1 + m2sq*x2 + m3sq*x3 + m4sq*x4"));
}

TEST_CASE("builtin graphs agree with data files") {
  for (auto [name, file] : {std::pair{"bubble", "bubble.json"}, {"triangle", "triangle.json"},
                            {"massless-triangle", "massless_triangle.json"},
                            {"sunrise", "sunrise.json"}, {"icecream", "icecream.json"},
                            {"tadpole", "tadpole.json"}, {"box", "box.json"}}) {
    CAPTURE(name);
    CHECK(lv::builtin_graph(name).to_json() == FeynmanGraph::load(data(file)).to_json());
  }
  CHECK_THROWS_AS(lv::builtin_graph("pentagon"), lv::Error);
}

TEST_CASE("spanning trees") {
  CHECK(lv::spanning_trees(lv::builtin_graph("bubble")) ==
        std::vector<lv::EdgeSet>{{0}, {1}});
  CHECK(lv::spanning_trees(lv::builtin_graph("triangle")).size() == 3);
  CHECK(lv::spanning_trees(lv::builtin_graph("sunrise")).size() == 3);
  CHECK(lv::spanning_trees(lv::builtin_graph("icecream")).size() == 5);
  CHECK(lv::spanning_trees(lv::builtin_graph("box")).size() == 4);
  CHECK(lv::spanning_trees(lv::builtin_graph("tadpole")) == std::vector<lv::EdgeSet>{{}});
  CHECK(lv::symanzik_U(lv::builtin_graph("tadpole")) == P("x1"));
  CHECK(lv::symanzik_F(lv::builtin_graph("tadpole")) == P("m1sq*x1^2"));
}

TEST_CASE("loop number and homogeneity") {
  for (const auto& name : lv::builtin_graph_names()) {
    CAPTURE(name);
    auto g = lv::builtin_graph(name);
    auto vars = g.edge_vars();
    int h = g.loop_number();
    CHECK(lv::symanzik_U(g).is_homogeneous_in(vars, h));
    CHECK(lv::symanzik_F(g).is_homogeneous_in(vars, h + 1));
  }
}

TEST_CASE("contraction") {
  auto ice = lv::builtin_graph("icecream");
  auto q = lv::contract(ice, {"e1", "e2"});
  CHECK(q.vertices.size() == 2);
  CHECK(edge_ids(q) == std::set<std::string>{"e3", "e4"});
  CHECK(q.loop_number() == 1);
  CHECK(lv::symanzik_U(q) == P("x3 + x4"));

  auto tri = lv::builtin_graph("triangle");
  auto b = lv::contract(tri, {"e3"});
  CHECK(b.vertices.size() == 2);
  CHECK(lv::spanning_trees(b).size() == 2);
  CHECK(lv::contract(tri, {}).to_json() == tri.to_json());

  CHECK_THROWS_AS(lv::contract(tri, {"e1", "e2", "e3"}), lv::Error);
  CHECK_THROWS_AS(lv::contract(lv::builtin_graph("tadpole"), {"e1"}), lv::Error);
  CHECK_THROWS_AS(lv::contract(tri, {"e9"}), lv::Error);
}

TEST_CASE("restriction x_e = 0 gives the quotient graph polynomials") {
  for (const char* name : {"bubble", "triangle", "sunrise", "icecream", "box"}) {
    auto g = lv::builtin_graph(name);
    auto U = lv::symanzik_U(g);
    auto F = lv::symanzik_F(g);
    for (const auto& e : g.edges) {
      if (e.u == e.v) continue;
      CAPTURE(name);
      CAPTURE(e.id);
      auto q = lv::contract(g, {e.id});
      std::map<std::string, Polynomial> zero{{e.var, Polynomial()}};
      CHECK(lv::substitute(U, zero) == lv::symanzik_U(q));
      CHECK(lv::substitute(F, zero) == lv::symanzik_F(q));
    }
  }
}

TEST_CASE("ice cream factorizes to first order in the subgraph chart") {
  auto ice = lv::builtin_graph("icecream");
  auto F = lv::symanzik_F(ice);
  auto Fc = lv::substitute(F, {{"x1", P("u")}, {"x2", P("u*v")}, {"x4", P("1")}});
  auto q = lv::contract(ice, {"e1", "e2"});
  auto Fq = lv::substitute(lv::symanzik_F(q), {{"x4", P("1")}});
  auto c1 = Fc.coefficient("u", 1);
  Polynomial Ugamma = P("1 + v");  // (x1 + x2)/u
  Polynomial quot;
  REQUIRE(lv::divides(Ugamma, c1, &quot));
  CHECK(quot == Fq);
  CHECK(Fc.coefficient("u", 0).is_zero());
}

TEST_CASE("graph JSON validation") {
  using nlohmann::json;
  json ok = lv::builtin_graph("bubble").to_json();
  auto bad = ok;
  bad["edges"][1]["id"] = "e1";
  CHECK_THROWS_AS(FeynmanGraph::from_json(bad), lv::Error);
  bad = ok;
  bad["edges"][1]["var"] = "x1";
  CHECK_THROWS_AS(FeynmanGraph::from_json(bad), lv::Error);
  bad = ok;
  bad["edges"][0]["ends"] = {"v1", "v9"};
  CHECK_THROWS_AS(FeynmanGraph::from_json(bad), lv::Error);
  bad = ok;
  bad["vertices"].push_back("v3");
  CHECK_THROWS_AS(FeynmanGraph::from_json(bad), lv::Error);
  bad = ok;
  bad.erase("edges");
  CHECK_THROWS_AS(FeynmanGraph::from_json(bad), lv::Error);
  bad = ok;
  bad["channels"] = json::object();
  CHECK_THROWS_AS(lv::symanzik_F(FeynmanGraph::from_json(bad)), lv::Error);
  CHECK_THROWS_AS(FeynmanGraph::load(data("missing.json")), lv::Error);
}
