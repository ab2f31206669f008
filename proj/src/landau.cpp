#include "landauvar/landau.hpp"

#include <algorithm>
#include <numeric>

#include "landauvar/error.hpp"

namespace lv {

std::string to_string(PinchKind k) {
  switch (k) {
    case PinchKind::linear: return "linear";
    case PinchKind::quadratic: return "quadratic";
    case PinchKind::general: return "general";
  }
  return "general";
}

PinchKind parse_pinch_kind(const std::string& s) {
  if (s == "linear") return PinchKind::linear;
  if (s == "quadratic") return PinchKind::quadratic;
  if (s == "general") return PinchKind::general;
  throw Error("unknown pinch kind '" + s + "'");
}

void LandauComponent::validate() const {
  auto subset = [](const std::set<std::string>& a, const std::set<std::string>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  if (defining.is_zero()) throw Error(id + ": defining polynomial is zero");
  if (!subset(simple_J, type_J) || !subset(simple_K, type_K))
    throw Error(id + ": simple type is not contained in the type");
  switch (pinch) {
    case PinchKind::linear:
      if (parity != -1) throw Error(id + ": linear pinch needs parity -1");
      break;
    case PinchKind::quadratic:
      if (!parity || *parity < 0) throw Error(id + ": quadratic pinch needs parity >= 0");
      break;
    case PinchKind::general:
      if (parity) throw Error(id + ": general critical set has no parity");
      break;
  }
  if (variation_known_zero && !(pinch == PinchKind::linear && (type_J.empty() || type_K.empty())))
    throw Error(id + ": zero variation is only known for pure-type linear pinches");
}

nlohmann::json LandauComponent::to_json() const {
  nlohmann::json j;
  j["id"] = id;
  j["defining"] = defining.str();
  j["type"] = {{"J", type_J}, {"K", type_K}};
  j["simple_type"] = {{"J", simple_J}, {"K", simple_K}};
  j["pinch"] = to_string(pinch);
  j["parity"] = parity ? nlohmann::json(*parity) : nlohmann::json(nullptr);
  j["variation_known_zero"] = variation_known_zero;
  j["n"] = n;
  return j;
}

LandauComponent LandauComponent::from_json(const nlohmann::json& j) {
  LandauComponent c;
  try {
    c.id = j.at("id").get<std::string>();
    c.defining = Polynomial::parse(j.at("defining").get<std::string>());
    c.type_J = j.at("type").at("J").get<std::set<std::string>>();
    c.type_K = j.at("type").at("K").get<std::set<std::string>>();
    c.simple_J = j.at("simple_type").at("J").get<std::set<std::string>>();
    c.simple_K = j.at("simple_type").at("K").get<std::set<std::string>>();
    c.pinch = parse_pinch_kind(j.at("pinch").get<std::string>());
    if (!j.at("parity").is_null()) c.parity = j["parity"].get<int>();
    c.variation_known_zero = j.at("variation_known_zero").get<bool>();
    c.n = j.at("n").get<int>();
  } catch (const nlohmann::json::exception& ex) {
    throw Error(std::string("malformed component JSON: ") + ex.what());
  }
  c.validate();
  return c;
}

Polynomial primitive_part(const Polynomial& p) {
  if (p.is_zero()) return p;
  mpz_class num = 0, den = 1;
  for (const auto& [k, c] : p.terms()) {
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational scale(den, num);
  scale.canonicalize();
  if (sgn(p.terms().rbegin()->second) < 0) scale = -scale;
  return p * Polynomial(scale);
}

namespace {

bool is_one_loop(const FeynmanGraph& g) {
  if (g.loop_number() != 1) return false;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    EdgeSet rest;
    for (std::size_t j = 0; j < g.edges.size(); ++j)
      if (j != i) rest.push_back(j);
    if (components(g, rest).size() != 1) return false;
  }
  return true;
}

// Invariant of the momentum crossing a cut of the cycle through two edges.
Polynomial arc_invariant(const FeynmanGraph& g, const EdgeSet& removed) {
  EdgeSet kept;
  for (std::size_t j = 0; j < g.edges.size(); ++j)
    if (!std::count(removed.begin(), removed.end(), j)) kept.push_back(j);
  auto comps = components(g, kept);
  if (comps.size() != 2) throw Error("one-loop cut does not separate the graph in two");
  return g.cut_invariant(comps.front());
}

std::string join_ids(const FeynmanGraph& g, const EdgeSet& s) {
  std::string out;
  for (auto i : s) out += (out.empty() ? "" : ",") + g.edges[i].id;
  return out;
}

LandauComponent make_component(std::string id, const Polynomial& defining,
                               std::set<std::string> J, std::set<std::string> K,
                               std::set<std::string> sJ, std::set<std::string> sK,
                               PinchKind kind, std::optional<int> parity, int n) {
  LandauComponent c;
  c.id = std::move(id);
  c.defining = defining;
  c.type_J = std::move(J);
  c.type_K = std::move(K);
  c.simple_J = std::move(sJ);
  c.simple_K = std::move(sK);
  c.pinch = kind;
  c.parity = parity;
  c.n = n;
  c.variation_known_zero =
      kind == PinchKind::linear && (c.type_J.empty() || c.type_K.empty());
  c.validate();
  return c;
}

}  // namespace

OneLoopMatrices gram_matrix(const FeynmanGraph& g) {
  if (!is_one_loop(g)) throw Error("gram_matrix needs a one-loop graph without bridges");
  const std::size_t k = g.edges.size();
  OneLoopMatrices out;
  out.M = PolyMatrix(k, k);
  out.S = PolyMatrix(k, k);
  out.Sprime = PolyMatrix(k + 1, k + 1);
  const Polynomial half(Rational(1, 2));
  for (std::size_t i = 0; i < k; ++i) {
    out.edge_ids.push_back(g.edges[i].id);
    out.M(i, i) = g.mass_squared(g.edges[i]);
    for (std::size_t j = i + 1; j < k; ++j) {
      Polynomial s = -arc_invariant(g, {i, j});
      out.M(i, j) = out.M(j, i) =
          half * (g.mass_squared(g.edges[i]) + g.mass_squared(g.edges[j]) + s);
      out.S(i, j) = out.S(j, i) = half * s;
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    out.Sprime(0, i + 1) = out.Sprime(i + 1, 0) = Polynomial(1);
    for (std::size_t j = 0; j < k; ++j) out.Sprime(i + 1, j + 1) = out.S(i, j);
  }
  return out;
}

std::vector<LandauComponent> oneloop_landau(const FeynmanGraph& g) {
  auto mats = gram_matrix(g);
  const std::size_t k = g.edges.size();
  if (k > 20) throw Error("too many edges for subset enumeration");
  const int n = static_cast<int>(k) - 1;

  std::vector<EdgeSet> subsets;
  for (unsigned long mask = 0; mask + 1 < (1ul << k); ++mask) {
    EdgeSet s;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1) s.push_back(i);
    subsets.push_back(std::move(s));
  }
  std::sort(subsets.begin(), subsets.end(), [](const EdgeSet& a, const EdgeSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });

  std::vector<LandauComponent> out;
  for (const auto& I : subsets) {
    EdgeSet keep;
    for (std::size_t i = 0; i < k; ++i)
      if (!std::count(I.begin(), I.end(), i)) keep.push_back(i);
    const int sz = static_cast<int>(I.size());
    std::set<std::string> K;
    for (auto i : I) K.insert("B_" + g.edges[i].id);
    std::string suffix = I.empty() ? "" : "/" + join_ids(g, I);

    Polynomial dF;
    PinchKind kindF;
    int parityF;
    if (sz == n) {
      dF = g.mass_squared(g.edges[keep.front()]);
      kindF = PinchKind::linear;
      parityF = -1;
    } else {
      dF = determinant(mats.M.select(keep, keep));
      kindF = PinchKind::quadratic;
      parityF = n - 1 - sz;
    }
    dF = primitive_part(dF);
    if (!dF.is_zero())
      out.push_back(make_component("F" + suffix, dF, {"A2"}, K, {"A2"}, K, kindF, parityF, n));

    if (sz == n) continue;
    Polynomial dFU;
    PinchKind kindFU;
    int parityFU;
    if (sz == n - 1) {
      // The two remaining edges cut the cycle into two arcs.
      dFU = arc_invariant(g, keep);
      kindFU = PinchKind::linear;
      parityFU = -1;
    } else {
      std::vector<std::size_t> rows{0};
      for (auto i : keep) rows.push_back(i + 1);
      dFU = determinant(mats.Sprime.select(rows, rows));
      kindFU = PinchKind::quadratic;
      parityFU = n - 2 - sz;
    }
    dFU = primitive_part(dFU);
    if (!dFU.is_zero())
      out.push_back(make_component("FU" + suffix, dFU, {"A1", "A2"}, K, {"A1", "A2"}, K, kindFU,
                                   parityFU, n));
  }
  return out;
}

std::vector<LandauComponent> split_thresholds(const FeynmanGraph& g,
                                              std::vector<LandauComponent> comps) {
  if (g.edges.size() != 2 || !g.edges[0].mass || !g.edges[1].mass) return comps;
  auto it = std::find_if(comps.begin(), comps.end(),
                         [](const LandauComponent& c) { return c.id == "F"; });
  if (it == comps.end()) return comps;

  Polynomial inv = arc_invariant(g, {0, 1});
  Polynomial m1 = Polynomial::variable(*g.edges[0].mass);
  Polynomial m2 = Polynomial::variable(*g.edges[1].mass);
  Polynomial plus = inv - (m1 + m2).pow(2);
  Polynomial minus = inv - (m1 - m2).pow(2);
  Polynomial in_masses =
      substitute(it->defining, {{mass_parameter(*g.edges[0].mass), m1.pow(2)},
                                {mass_parameter(*g.edges[1].mass), m2.pow(2)}});
  if (!proportional(in_masses, plus * minus))
    throw Error("threshold factors do not reproduce the bubble discriminant");

  LandauComponent p = *it, m = *it;
  p.id = "F+";
  p.defining = primitive_part(plus);
  m.id = "F-";
  m.defining = primitive_part(minus);
  it = comps.erase(it);
  it = comps.insert(it, m);
  comps.insert(it, p);
  return comps;
}

Polynomial eliminate_critical_values(const Polynomial& F, const std::vector<std::string>& fiber_vars,
                                     const std::map<std::string, Polynomial>& chart) {
  for (const auto& [v, val] : chart)
    if (std::find(fiber_vars.begin(), fiber_vars.end(), v) == fiber_vars.end())
      throw Error("chart binds '" + v + "', which is not a fibre variable");
  if (!chart.empty() && !F.is_homogeneous_in(fiber_vars, F.degree_in(fiber_vars)))
    throw Error("polynomial is not homogeneous in the fibre variables");

  Polynomial G = substitute(F, chart);
  std::vector<std::string> free;
  for (const auto& v : fiber_vars)
    if (!chart.count(v)) free.push_back(v);

  Polynomial R;
  if (free.size() == 1) {
    R = resultant(G, partial_derivative(G, free[0]), free[0]);
  } else if (free.size() == 2) {
    const auto& x = free[0];
    const auto& y = free[1];
    Polynomial r1 = resultant(G, partial_derivative(G, x), x);
    Polynomial r2 = resultant(G, partial_derivative(G, y), x);
    R = resultant(r1, r2, y);
  } else {
    throw Error("elimination needs one or two free fibre variables, got " +
                std::to_string(free.size()));
  }
  if (R.is_zero()) throw Error("elimination degenerated to the zero polynomial");
  return R;
}

Polynomial icecream_ellA12(const FeynmanGraph& g) {
  auto q = contract(g, {"e1", "e2"});
  const Edge& e3 = g.edges[g.edge_index("e3")];
  const Edge& e4 = g.edges[g.edge_index("e4")];
  auto channel = [&](const std::string& p) {
    auto it = g.channels.find({p});
    if (it == g.channels.end()) throw Error("ice cream needs a channel for " + p);
    return it->second;
  };
  Polynomial m3 = g.mass_squared(e3), m4 = g.mass_squared(e4);
  // x3/x4 = -(m4^2 - p2^2)/(m3^2 - p3^2), written projectively.
  return substitute(symanzik_F(q),
                    {{e3.var, -(m4 - channel("p2"))}, {e4.var, m3 - channel("p3")}});
}

Polynomial icecream_ellA12() { return icecream_ellA12(builtin_graph("icecream")); }

Polynomial icecream_ellA12_printed() {
  return Polynomial::parse(
      "p1sq*(m3sq - p3sq)*(m4sq - p2sq) + (m3sq*p2sq - m4sq*p3sq)*(m3sq - m4sq + p2sq - p3sq)");
}

namespace {

using Set = std::set<std::string>;
Polynomial P(const char* s) { return Polynomial::parse(s); }

const char* kKallen = "p1sq^2 + p2sq^2 + p3sq^2 - 2*p1sq*p2sq - 2*p1sq*p3sq - 2*p2sq*p3sq";

std::vector<LandauComponent> massless_triangle() {
  std::vector<LandauComponent> out;
  const char* B[3][3] = {{"B1", "B12", "B13"}, {"B2", "B12", "B23"}, {"B3", "B13", "B23"}};
  for (int i = 0; i < 3; ++i) {
    std::string s = std::to_string(i + 1);
    out.push_back(make_component("l" + s, P(("p" + s + "sq").c_str()), {"A1", "A2"},
                                 {B[i][0], B[i][1], B[i][2]}, {"A2"}, {}, PinchKind::general,
                                 std::nullopt, 2));
  }
  out.push_back(make_component("ld", P(kKallen), {"A1", "A2"}, {}, {"A1", "A2"}, {},
                               PinchKind::quadratic, 0, 2));
  return out;
}

std::vector<LandauComponent> sunrise() {
  std::vector<LandauComponent> out;
  out.push_back(make_component("lp", P("psq"), {"A1", "A2", "A12", "A13", "A23"}, {}, {"A2"}, {},
                               PinchKind::general, std::nullopt, 2));
  const char* pair[3] = {"23", "13", "12"};
  for (int i = 0; i < 3; ++i) {
    std::string s = std::to_string(i + 1);
    std::string jk = pair[i];
    out.push_back(make_component(
        "l" + s, P(("m" + s + "sq").c_str()), {"A1", "A2", "A" + jk},
        {"B" + jk.substr(0, 1), "B" + jk.substr(1, 1), "B" + jk}, {"A2"}, {}, PinchKind::general,
        std::nullopt, 2));
  }
  for (const char* ab : {"++", "+-", "-+", "--"}) {
    std::string expr = std::string("psq - (m1 ") + ab[0] + " m2 " + ab[1] + " m3)^2";
    out.push_back(make_component(std::string("l") + ab, primitive_part(P(expr.c_str())), {"A2"},
                                 {}, {"A2"}, {}, PinchKind::quadratic, 1, 2));
  }
  return out;
}

std::vector<LandauComponent> icecream_partial() {
  return {
      make_component("lA12", primitive_part(icecream_ellA12_printed()), {"A2", "A12"}, {},
                     {"A2", "A12"}, {}, PinchKind::quadratic, 1, 3),
      make_component("lB12", P("(m3sq + m4sq - p1sq)^2 - 4*m3sq*m4sq"), {"A2", "A12"},
                     {"B1", "B2", "B12"}, {"A2"}, {}, PinchKind::general, std::nullopt, 3),
      make_component("ld", P(kKallen), {"A1", "A2", "A12"}, {}, {"A2"}, {}, PinchKind::general,
                     std::nullopt, 3),
  };
}

// Homogeneous coordinate [t0 : t1] on the parameter line, t = t1/t0.
std::vector<LandauComponent> logarithm() {
  return {
      make_component("l0", P("t1"), {"A1", "A2"}, {}, {"A1", "A2"}, {}, PinchKind::linear, -1, 1),
      make_component("l1", P("t1 - t0"), {"A1"}, {"B2"}, {"A1"}, {"B2"}, PinchKind::linear, -1, 1),
      make_component("linf", P("t0"), {"A1"}, {"B1"}, {"A1"}, {"B1"}, PinchKind::linear, -1, 1),
  };
}

std::vector<LandauComponent> dilog() {
  return {
      make_component("l0", P("t1"), {"A1", "A2", "A3", "A4", "A5"}, {"B3", "B4"}, {"A3"}, {},
                     PinchKind::general, std::nullopt, 2),
      make_component("l1", P("t1 - t0"), {"A3"}, {"B3", "B4"}, {"A3"}, {"B3", "B4"},
                     PinchKind::linear, -1, 2),
      make_component("linf", P("t0"), {"A3", "A4", "A5"}, {"B1", "B2", "B3", "B4"}, {"A3"}, {},
                     PinchKind::general, std::nullopt, 2),
  };
}

std::vector<LandauComponent> bubble() {
  auto g = builtin_graph("bubble");
  auto comps = split_thresholds(g, oneloop_landau(g));
  const std::vector<std::pair<std::string, std::string>> order{
      {"F/e2", "l1"}, {"F/e1", "l2"}, {"F+", "lD+"}, {"F-", "lD-"}, {"FU", "lp"}};
  std::vector<LandauComponent> out;
  for (const auto& [from, to] : order) {
    auto it = std::find_if(comps.begin(), comps.end(),
                           [&](const LandauComponent& c) { return c.id == from; });
    if (it == comps.end()) throw Error("bubble component " + from + " missing");
    out.push_back(*it);
    out.back().id = to;
  }
  return out;
}

}  // namespace

std::vector<LandauComponent> fixture_landau(const std::string& name) {
  if (name == "massless-triangle") return massless_triangle();
  if (name == "sunrise") return sunrise();
  if (name == "icecream-partial") return icecream_partial();
  if (name == "bubble") return bubble();
  if (name == "logarithm") return logarithm();
  if (name == "dilog") return dilog();
  throw Error("unknown fixture '" + name + "'");
}

std::vector<std::string> fixture_names() {
  return {"bubble", "dilog", "icecream-partial", "logarithm", "massless-triangle", "sunrise"};
}

}  // namespace lv
