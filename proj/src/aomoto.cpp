#include "landauvar/aomoto.hpp"

#include <algorithm>
#include <numeric>

#include "landauvar/error.hpp"

namespace lv {

namespace {

std::string join(const std::set<int>& s, const std::string& sep) {
  std::string out;
  for (int x : s) out += (out.empty() ? "" : sep) + std::to_string(x);
  return out;
}

std::set<int> parse_indices(const std::string& s) {
  std::set<int> out;
  if (s.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    std::size_t end = s.find(',', pos);
    std::string tok = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    if (tok.empty() || tok.size() > 6 || !std::all_of(tok.begin(), tok.end(), ::isdigit))
      throw Error("bad index list '" + s + "'");
    out.insert(std::stoi(tok));
    if (end == std::string::npos) return out;
    pos = end + 1;
  }
}

void check_weight(int n) {
  if (n < 1) throw Error("Aomoto weight must be at least 1");
}

void check_permutation(int n, const std::vector<int>& p) {
  std::vector<int> sorted = p;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> id(n + 1);
  std::iota(id.begin(), id.end(), 0);
  if (sorted != id) throw Error("not a permutation of {0.." + std::to_string(n) + "}");
}

int inversion_sign(const std::vector<int>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 ? -1 : 1;
}

// Sign from the cycle decomposition: (-1)^(size - #cycles).
int cycle_sign(const std::vector<int>& p) {
  std::vector<bool> seen(p.size(), false);
  int cycles = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) seen[j] = true;
  }
  return (static_cast<int>(p.size()) - cycles) % 2 ? -1 : 1;
}

}  // namespace

std::string aomoto_id(const AomotoIndex& ij) {
  return "I" + join(ij.I, ",") + "/J" + join(ij.J, ",");
}

AomotoIndex parse_aomoto_id(const std::string& id) {
  auto slash = id.find('/');
  if (id.empty() || id[0] != 'I' || slash == std::string::npos || slash + 1 >= id.size() ||
      id[slash + 1] != 'J')
    throw Error("bad Aomoto component id '" + id + "'");
  return {parse_indices(id.substr(1, slash - 1)), parse_indices(id.substr(slash + 2))};
}

std::vector<LandauComponent> aomoto_components(int n) {
  check_weight(n);
  std::vector<AomotoIndex> all;
  const int N = n + 1;
  for (unsigned a = 0; a < (1u << N); ++a)
    for (unsigned b = 0; b < (1u << N); ++b) {
      if (__builtin_popcount(a) + __builtin_popcount(b) != N) continue;
      AomotoIndex ij;
      for (int i = 0; i < N; ++i) {
        if (a >> i & 1) ij.I.insert(i);
        if (b >> i & 1) ij.J.insert(i);
      }
      all.push_back(ij);
    }
  std::sort(all.begin(), all.end(), [](const AomotoIndex& x, const AomotoIndex& y) {
    if (x.I.size() != y.I.size()) return x.I.size() < y.I.size();
    return x < y;
  });
  std::vector<LandauComponent> out;
  for (const auto& ij : all) {
    LandauComponent c;
    c.id = aomoto_id(ij);
    c.defining = Polynomial::variable("det_I" + join(ij.I, "_") + "_J" + join(ij.J, "_"));
    for (int i : ij.I) c.type_J.insert("Q" + std::to_string(i));
    for (int j : ij.J) c.type_K.insert("R" + std::to_string(j));
    c.simple_J = c.type_J;
    c.simple_K = c.type_K;
    c.pinch = PinchKind::linear;
    c.parity = -1;
    c.variation_known_zero = ij.I.empty() || ij.J.empty();
    c.n = n;
    out.push_back(c);
  }
  return out;
}

HierarchyRelation aomoto_edges(int n) {
  auto comps = aomoto_components(n);
  HierarchyRelation rel;
  std::vector<AomotoIndex> idx;
  for (const auto& c : comps) {
    rel.nodes.push_back(c.id);
    idx.push_back(parse_aomoto_id(c.id));
  }
  auto strict_subset = [](const std::set<int>& a, const std::set<int>& b) {
    return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b)
      if (strict_subset(idx[a].I, idx[b].I) && strict_subset(idx[b].J, idx[a].J))
        rel.edges.insert({a, b});
  return rel;
}

std::vector<std::string> SymbolWord::component_word() const {
  std::vector<std::string> out;
  for (const auto& l : letters) out.push_back(aomoto_id(l));
  return out;
}

std::string SymbolWord::text() const {
  std::string out;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    if (!out.empty()) out += " (x) ";
    out += "a(" + join(it->I, ",") + "|" + join(it->J, ",") + ")";
  }
  return out;
}

std::vector<SymbolWord> aomoto_symbol(int n) {
  check_weight(n);
  std::vector<int> sigma(n + 1);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<SymbolWord> out;
  do {
    std::vector<int> tau(n + 1);
    std::iota(tau.begin(), tau.end(), 0);
    do {
      SymbolWord w;
      w.sigma = sigma;
      w.tau = tau;
      w.sign = inversion_sign(sigma) * inversion_sign(tau);
      for (int k = 1; k <= n; ++k) {
        AomotoIndex ij;
        ij.I.insert(sigma.begin(), sigma.begin() + k);
        ij.J.insert(tau.begin() + k, tau.end());
        w.letters.push_back(ij);
      }
      out.push_back(std::move(w));
    } while (std::next_permutation(tau.begin(), tau.end()));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

std::string ChainValue::str() const {
  return std::string(sign > 0 ? "+" : "-") + "(2 pi i)^" + std::to_string(n);
}

ChainValue maximal_chain_value(int n, const std::vector<int>& sigma, const std::vector<int>& tau) {
  check_weight(n);
  check_permutation(n, sigma);
  check_permutation(n, tau);
  return {cycle_sign(sigma) * cycle_sign(tau), n};
}

nlohmann::json symbol_to_json(int n, const std::vector<SymbolWord>& words) {
  nlohmann::json j;
  j["n"] = n;
  j["conventions"] = {"overall sign +1 at (sigma, tau) = (id, id)"};
  j["words"] = nlohmann::json::array();
  for (const auto& w : words)
    j["words"].push_back({{"sign", w.sign},
                          {"sigma", w.sigma},
                          {"tau", w.tau},
                          {"letters", w.component_word()},
                          {"text", w.text()}});
  return j;
}

}  // namespace lv
