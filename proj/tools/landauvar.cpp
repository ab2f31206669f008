// Command-line front end.  Exit status: 0 on success, 1 on domain errors,
// 2 on usage errors.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"
#include "landauvar/aomoto.hpp"
#include "landauvar/error.hpp"
#include "landauvar/graph.hpp"
#include "landauvar/hierarchy.hpp"
#include "landauvar/homology.hpp"
#include "landauvar/landau.hpp"
#include "landauvar/monodromy.hpp"
#include "landauvar/variation.hpp"

using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, sep)) out.push_back(tok);
  return out;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : sep) + x;
  return out;
}

std::string braces(const std::set<std::string>& s) {
  return "{" + join(std::vector<std::string>(s.begin(), s.end()), ",") + "}";
}

// "word=l2,lD+" or "l2,lD+".
std::vector<std::string> parse_component_word(std::string s) {
  if (s.rfind("word=", 0) == 0) s = s.substr(5);
  else if (s.rfind("w=", 0) == 0) s = s.substr(2);
  auto w = split(s, ',');
  if (w.empty()) throw UsageError("empty component word");
  return w;
}

// "a", "a+bi", "a-bi", "bi".
lv::Complex parse_complex(const std::string& s) {
  std::istringstream in(s);
  double re = 0, im = 0;
  if (!s.empty() && s.back() == 'i') {
    auto body = s.substr(0, s.size() - 1);
    auto pos = body.find_last_of("+-");
    while (pos != std::string::npos && pos > 0 && (body[pos - 1] == 'e' || body[pos - 1] == 'E'))
      pos = body.find_last_of("+-", pos - 1);
    try {
      if (pos == std::string::npos || pos == 0) {
        im = body.empty() || body == "+" ? 1 : body == "-" ? -1 : std::stod(body);
      } else {
        re = std::stod(body.substr(0, pos));
        auto ims = body.substr(pos);
        im = ims == "+" ? 1 : ims == "-" ? -1 : std::stod(ims);
      }
    } catch (const std::exception&) {
      throw UsageError("bad complex number '" + s + "'");
    }
    return {re, im};
  }
  std::size_t used = 0;
  try {
    re = std::stod(s, &used);
  } catch (const std::exception&) {
    throw UsageError("bad number '" + s + "'");
  }
  if (used != s.size()) throw UsageError("bad number '" + s + "'");
  return {re, 0};
}

std::map<std::string, std::string> parse_assignments(const std::string& s) {
  std::map<std::string, std::string> out;
  for (const auto& kv : split(s, ',')) {
    auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("expected name=value, got '" + kv + "'");
    out[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  return out;
}

std::set<int> parse_int_set(const std::string& s) {
  std::set<int> out;
  for (const auto& t : split(s, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(t, &used);
      if (used != t.size()) throw std::invalid_argument(t);
      out.insert(v);
    } catch (const std::exception&) {
      throw UsageError("bad index list '" + s + "'");
    }
  }
  return out;
}

lv::FeynmanGraph load_graph(const std::string& arg) {
  if (!std::filesystem::exists(arg)) {
    auto names = lv::builtin_graph_names();
    if (std::find(names.begin(), names.end(), arg) != names.end()) return lv::builtin_graph(arg);
  }
  return lv::FeynmanGraph::load(arg);
}

// Landau components of a fixture name or a one-loop graph file.
std::vector<lv::LandauComponent> load_components(const std::string& source, bool split_thr) {
  auto fixtures = lv::fixture_names();
  if (std::find(fixtures.begin(), fixtures.end(), source) != fixtures.end() &&
      !std::filesystem::exists(source))
    return lv::fixture_landau(source);
  auto g = load_graph(source);
  auto comps = lv::oneloop_landau(g);
  return split_thr ? lv::split_thresholds(g, comps) : comps;
}

lv::VariationModel load_model(const std::string& arg) {
  auto names = lv::builtin_model_names();
  if (std::find(names.begin(), names.end(), arg) != names.end() && !std::filesystem::exists(arg))
    return lv::builtin_model(arg);
  std::ifstream in(arg);
  if (!in) throw lv::Error("unknown model '" + arg + "'");
  try {
    return lv::VariationModel::from_json(json::parse(in));
  } catch (const json::parse_error& ex) {
    throw lv::Error(arg + ": " + ex.what());
  }
}

json components_json(const std::vector<lv::LandauComponent>& comps) {
  json a = json::array();
  for (const auto& c : comps) a.push_back(c.to_json());
  return a;
}

void print_components(std::ostream& out, const std::vector<lv::LandauComponent>& comps) {
  for (const auto& c : comps) {
    out << c.id << "  " << lv::to_string(c.pinch);
    if (c.parity) out << " parity=" << *c.parity;
    out << "  J=" << braces(c.type_J) << " K=" << braces(c.type_K);
    if (c.simple_J != c.type_J || c.simple_K != c.type_K)
      out << "  simple J=" << braces(c.simple_J) << " K=" << braces(c.simple_K);
    if (c.variation_known_zero) out << "  Var=0";
    out << "\n    " << c.defining.str() << "\n";
  }
}

json verdict_json(const std::vector<std::string>& word, const lv::Verdict& v) {
  return {{"word", word}, {"forced_zero", v.forced_zero}, {"reason", v.reason}};
}

json hierarchy_json(const lv::HierarchyRelation& rel) {
  json j = rel.to_json();
  j["reachability"] = json::array();
  for (const auto& [a, b] : rel.reachability()) j["reachability"].push_back({a, b});
  return j;
}

std::string matrix_text(const lv::VariationModel& m, const lv::VarMatrix& v) {
  std::size_t w = 1;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) w = std::max(w, lv::format_entry(v(i, j)).size());
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out << "  ";
    for (std::size_t j = 0; j < v.size(); ++j) {
      auto e = lv::format_entry(v(i, j));
      out << std::string(w - e.size() + (j ? 1 : 0), ' ') << e;
    }
    out << "   " << m.basis[i] << "\n";
  }
  return out.str();
}

json matrix_json(const lv::VarMatrix& v) {
  json rows = json::array();
  for (std::size_t i = 0; i < v.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < v.size(); ++j)
      row.push_back(v(i, j) ? json(lv::to_string(*v(i, j))) : json(nullptr));
    rows.push_back(row);
  }
  return rows;
}

void check_format(const std::string& f, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (f == a) return;
  throw UsageError("format '" + f + "' is not available here");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Landau varieties, hierarchy and variations of Feynman-type integrals"};
  app.require_subcommand(1);
  std::string format = "text";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "text, json or dot")->check(CLI::IsMember({"text", "json", "dot"}));
  };

  // symanzik
  auto* sym = app.add_subcommand("symanzik", "Symanzik polynomials U and F of a graph");
  std::string graph_arg;
  sym->add_option("graph", graph_arg, "graph JSON file or builtin graph name")->required();
  add_format(sym);

  // landau
  auto* landau = app.add_subcommand("landau", "Landau components");
  landau->require_subcommand(1);
  bool split_thr = false;
  auto* oneloop = landau->add_subcommand("oneloop", "closed-form one-loop components");
  oneloop->add_option("graph", graph_arg)->required();
  oneloop->add_flag("--split", split_thr, "split the two-edge threshold into F+ and F-");
  add_format(oneloop);
  std::string fixture_name;
  auto* fixture = landau->add_subcommand("fixture", "fixed component lists");
  fixture->add_option("name", fixture_name)->required();
  add_format(fixture);
  std::string chart_arg;
  auto* elim = landau->add_subcommand("eliminate", "critical values of F by resultants");
  elim->add_option("graph", graph_arg)->required();
  elim->add_option("--chart", chart_arg, "fibre coordinates to fix, e.g. x3=1")->required();
  add_format(elim);

  // hierarchy
  auto* hier = app.add_subcommand("hierarchy", "hierarchy relation between components");
  std::string source;
  bool dot = false;
  std::vector<std::string> checks;
  hier->add_option("source", source, "fixture name or one-loop graph file")->required();
  hier->add_flag("--split", split_thr);
  hier->add_flag("--dot", dot, "emit a DOT digraph");
  hier->add_option("--check", checks, "word=a,b,... (application order)");
  add_format(hier);

  // homrank
  auto* hr = app.add_subcommand("homrank", "rank of the local homology of a simple pinch");
  int hn = 0, hm = 0, hdeg = 0;
  std::string hI, hJ, hK, variant = "open";
  hr->add_option("--n", hn)->required();
  hr->add_option("--m", hm)->required();
  hr->add_option("--I", hI);
  hr->add_option("--J", hJ);
  hr->add_option("--K", hK);
  hr->add_option("--degree", hdeg)->required();
  hr->add_option("--variant", variant)->check(CLI::IsMember({"open", "closed"}));
  add_format(hr);

  // signword
  auto* sw = app.add_subcommand("signword", "normal form and sign of an operator word");
  std::string word_text;
  sw->add_option("word", word_text, "e.g. \"d1 p2 w3:r=4\"")->required();
  add_format(sw);

  // variation
  auto* var = app.add_subcommand("variation", "variation operators of builtin or JSON models");
  var->require_subcommand(1);
  std::string model_arg, word_arg;
  int max_len = 4;
  auto* vtable = var->add_subcommand("table", "print all matrices");
  vtable->add_option("model", model_arg)->required();
  add_format(vtable);
  auto* vcomp = var->add_subcommand("compose", "compose variations along a word");
  vcomp->add_option("model", model_arg)->required();
  vcomp->add_option("word", word_arg, "w=a,b,... (application order)")->required();
  add_format(vcomp);
  auto* vaudit = var->add_subcommand("audit", "compare vanishing words with the hierarchy");
  vaudit->add_option("model", model_arg)->required();
  vaudit->add_option("--max-len", max_len)->check(CLI::Range(1, 8));
  add_format(vaudit);

  // aomoto
  auto* ao = app.add_subcommand("aomoto", "Aomoto polylogarithm arrangement");
  ao->require_subcommand(1);
  int an = 1;
  auto* asym = ao->add_subcommand("symbol", "length-n part of the symbol");
  asym->add_option("--n", an)->required()->check(CLI::Range(1, 6));
  add_format(asym);
  auto* ahier = ao->add_subcommand("hierarchy", "components and hierarchy");
  ahier->add_option("--n", an)->required()->check(CLI::Range(1, 6));
  ahier->add_flag("--dot", dot);
  add_format(ahier);

  // track
  auto* tr = app.add_subcommand("track", "track roots of F along a parameter loop");
  std::string var_name, loop_arg, fix_arg;
  std::vector<std::string> marks;
  double tol = 1e-10;
  tr->add_option("graph", graph_arg)->required();
  tr->add_option("--chart", chart_arg)->required();
  tr->add_option("--var", var_name)->required();
  tr->add_option("--loop", loop_arg, "param:center=c,r=0.1[,orientation=-1,turns=2,steps=256]")
      ->required();
  tr->add_option("--fix", fix_arg, "other parameters, e.g. m1sq=1,m2sq=4");
  tr->add_option("--mark", marks, "marked points for winding numbers");
  tr->add_option("--tol", tol);

  // analyze
  auto* an_cmd = app.add_subcommand("analyze", "symanzik, landau and hierarchy in one report");
  std::string fixture_override, audit_model;
  an_cmd->add_option("graph", graph_arg)->required();
  an_cmd->add_option("--fixture", fixture_override, "use a fixture component list");
  an_cmd->add_option("--check", checks);
  an_cmd->add_option("--audit", audit_model, "variation model to audit against the hierarchy");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  auto& out = std::cout;
  try {
    if (*sym) {
      check_format(format, {"text", "json"});
      auto g = load_graph(graph_arg);
      auto U = lv::symanzik_U(g), F = lv::symanzik_F(g);
      if (format == "json")
        out << json{{"U", U.str()}, {"F", F.str()}}.dump(2) << "\n";
      else
        out << "U = " << U.str() << "\nF = " << F.str() << "\n";
    } else if (*landau) {
      check_format(format, {"text", "json"});
      if (*elim) {
        auto g = load_graph(graph_arg);
        std::map<std::string, lv::Polynomial> chart;
        for (const auto& [k, v] : parse_assignments(chart_arg)) chart[k] = lv::Polynomial::parse(v);
        auto p = lv::eliminate_critical_values(lv::symanzik_F(g), g.edge_vars(), chart);
        if (format == "json")
          out << json{{"chart", chart_arg}, {"critical_values", p.str()}}.dump(2) << "\n";
        else
          out << p.str() << "\n";
      } else {
        std::vector<lv::LandauComponent> comps;
        if (*fixture) {
          comps = lv::fixture_landau(fixture_name);
        } else {
          auto g = load_graph(graph_arg);
          comps = lv::oneloop_landau(g);
          if (split_thr) comps = lv::split_thresholds(g, comps);
        }
        if (format == "json")
          out << components_json(comps).dump(2) << "\n";
        else
          print_components(out, comps);
      }
    } else if (*hier) {
      if (dot) format = "dot";
      auto comps = load_components(source, split_thr);
      auto rel = lv::hierarchy_graph(comps);
      json verdicts = json::array();
      for (const auto& c : checks) {
        auto w = parse_component_word(c);
        verdicts.push_back(verdict_json(w, lv::word_vanishes(rel, comps, w)));
      }
      if (format == "dot") {
        out << lv::to_dot(rel, comps);
      } else if (format == "json") {
        json j = hierarchy_json(rel);
        if (!checks.empty()) j["verdicts"] = verdicts;
        out << j.dump(2) << "\n";
      } else if (!checks.empty()) {
        for (const auto& v : verdicts)
          out << join(v["word"].get<std::vector<std::string>>(), ",") << ": "
              << (v["forced_zero"].get<bool>() ? "forced zero (" + v["reason"].get<std::string>() + ")"
                                               : "unconstrained")
              << "\n";
      } else {
        for (const auto& [a, b] : rel.edge_list()) out << a << " -> " << b << "\n";
      }
    } else if (*hr) {
      check_format(format, {"text", "json"});
      lv::PinchConfig cfg;
      cfg.n = hn;
      cfg.m = hm;
      cfg.I = parse_int_set(hI);
      cfg.J = parse_int_set(hJ);
      cfg.K = parse_int_set(hK);
      int r = lv::local_rank(cfg, hdeg, variant == "open" ? lv::Variant::open : lv::Variant::closed);
      if (format == "json")
        out << json{{"rank", r}, {"degree", hdeg}, {"variant", variant}}.dump(2) << "\n";
      else
        out << r << "\n";
    } else if (*sw) {
      check_format(format, {"text", "json"});
      auto [sign, normal] = lv::normalize_word(lv::parse_word(word_text));
      if (format == "json")
        out << json{{"sign", sign}, {"word", lv::format_word(normal)}}.dump(2) << "\n";
      else
        out << (sign > 0 ? "+" : "-") << " " << lv::format_word(normal) << "\n";
    } else if (*var) {
      check_format(format, {"text", "json"});
      auto model = load_model(model_arg);
      if (*vtable) {
        if (format == "json") {
          out << model.to_json().dump(2) << "\n";
        } else {
          out << "model " << model.name << "  basis " << join(model.basis, " ") << "\n";
          for (const auto& c : model.conventions) out << "convention: " << c << "\n";
          for (const auto& id : model.component_ids())
            out << "Var[" << id << "]\n" << matrix_text(model, model.op(id));
        }
      } else if (*vcomp) {
        auto w = parse_component_word(word_arg);
        auto m = lv::compose_partial(model, w);
        if (format == "json")
          out << json{{"word", w}, {"matrix", matrix_json(m)}, {"fully_known", m.fully_known()}}.dump(2)
              << "\n";
        else
          out << "Var[" << join(w, " then ") << "]\n" << matrix_text(model, m);
      } else {
        auto report = lv::check_against_hierarchy(model, lv::hierarchy_graph(model.components), max_len);
        if (format == "json") {
          out << report.to_json().dump(2) << "\n";
        } else {
          out << "words checked: " << report.words_checked << "\nforced zero: " << report.forced_zero
              << "\nviolations: " << report.violations.size()
              << "\nundetermined: " << report.undetermined.size() << "\n";
          for (const auto& v : report.violations)
            out << "  violation " << join(v.word, ",") << " (" << v.reason << ")\n";
        }
        if (!report.violations.empty()) return 1;
      }
    } else if (*ao) {
      if (*asym) {
        check_format(format, {"text", "json"});
        auto ws = lv::aomoto_symbol(an);
        if (format == "json") {
          out << lv::symbol_to_json(an, ws).dump(2) << "\n";
        } else {
          for (const auto& w : ws) out << (w.sign > 0 ? "+ " : "- ") << w.text() << "\n";
        }
      } else {
        if (dot) format = "dot";
        auto comps = lv::aomoto_components(an);
        auto rel = lv::aomoto_edges(an);
        if (format == "dot")
          out << lv::to_dot(rel, comps);
        else if (format == "json")
          out << json{{"components", components_json(comps)}, {"hierarchy", hierarchy_json(rel)}}.dump(2)
              << "\n";
        else
          for (const auto& [a, b] : rel.edge_list()) out << a << " -> " << b << "\n";
      }
    } else if (*tr) {
      auto g = load_graph(graph_arg);
      std::map<std::string, lv::Polynomial> chart;
      for (const auto& [k, v] : parse_assignments(chart_arg)) chart[k] = lv::Polynomial::parse(v);
      lv::ParametricRootSystem sys;
      sys.f = lv::substitute(lv::symanzik_F(g), chart);
      sys.var = var_name;
      auto colon = loop_arg.find(':');
      if (colon == std::string::npos || colon == 0) throw UsageError("--loop needs param:center=...,r=...");
      sys.loop.param = loop_arg.substr(0, colon);
      auto opts = parse_assignments(loop_arg.substr(colon + 1));
      if (!opts.count("center")) throw UsageError("--loop needs center=");
      for (const auto& [k, v] : opts) {
        if (k == "center") sys.loop.center = parse_complex(v);
        else if (k == "r") sys.loop.radius = parse_complex(v).real();
        else if (k == "orientation") sys.loop.orientation = std::stoi(v);
        else if (k == "turns") sys.loop.turns = std::stoi(v);
        else if (k == "steps") sys.loop.steps = std::stoi(v);
        else throw UsageError("unknown loop option '" + k + "'");
      }
      for (const auto& [k, v] : parse_assignments(fix_arg)) sys.fixed[k] = parse_complex(v);
      std::vector<lv::Complex> marked;
      for (const auto& m : marks) marked.push_back(parse_complex(m));
      out << lv::track(sys, marked, tol).to_json().dump(2) << "\n";
    } else if (*an_cmd) {
      auto g = load_graph(graph_arg);
      std::vector<lv::LandauComponent> comps;
      if (!fixture_override.empty()) {
        comps = lv::fixture_landau(fixture_override);
      } else if (g.loop_number() == 1) {
        comps = lv::split_thresholds(g, lv::oneloop_landau(g));
      } else {
        throw lv::Error("automatic Landau analysis covers one-loop graphs; pass --fixture");
      }
      auto rel = lv::hierarchy_graph(comps);
      json report;
      report["graph"] = {{"input", graph_arg},
                         {"vertices", g.vertices.size()},
                         {"edges", g.edges.size()},
                         {"loops", g.loop_number()},
                         {"definition", g.to_json()}};
      report["symanzik"] = {{"U", lv::symanzik_U(g).str()}, {"F", lv::symanzik_F(g).str()}};
      report["landau"] = components_json(comps);
      report["hierarchy"] = hierarchy_json(rel);
      report["verdicts"] = json::array();
      for (const auto& c : checks) {
        auto w = parse_component_word(c);
        report["verdicts"].push_back(verdict_json(w, lv::word_vanishes(rel, comps, w)));
      }
      if (!audit_model.empty()) {
        auto model = load_model(audit_model);
        report["audit"] =
            lv::check_against_hierarchy(model, lv::hierarchy_graph(model.components), 4).to_json();
      }
      out << report.dump(2) << "\n";
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const lv::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
