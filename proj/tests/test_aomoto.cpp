#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "doctest.h"
#include "landauvar/aomoto.hpp"
#include "landauvar/error.hpp"

using lv::AomotoIndex;

namespace {

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Signed multiset of words, keyed by text.
std::map<std::string, int> signed_words(const std::vector<lv::SymbolWord>& ws) {
  std::map<std::string, int> out;
  for (const auto& w : ws) out[w.text()] += w.sign;
  return out;
}

}  // namespace

TEST_CASE("Aomoto component counts") {
  for (int n = 1; n <= 4; ++n) {
    auto comps = lv::aomoto_components(n);
    CHECK(static_cast<long>(comps.size()) == binomial(2 * n + 2, n + 1));
    std::set<std::string> ids;
    for (const auto& c : comps) {
      ids.insert(c.id);
      c.validate();
      auto ij = lv::parse_aomoto_id(c.id);
      CHECK(ij.I.size() + ij.J.size() == static_cast<std::size_t>(n + 1));
      CHECK(c.variation_known_zero == (ij.I.empty() || ij.J.empty()));
      CHECK(c.pinch == lv::PinchKind::linear);
    }
    CHECK(ids.size() == comps.size());
  }
  CHECK_THROWS_AS(lv::aomoto_components(0), lv::Error);
}

TEST_CASE("Aomoto ids") {
  AomotoIndex ij{{0, 1}, {2}};
  CHECK(lv::aomoto_id(ij) == "I0,1/J2");
  CHECK(lv::parse_aomoto_id("I0,1/J2") == ij);
  CHECK(lv::parse_aomoto_id("I/J0,1") == AomotoIndex{{}, {0, 1}});
  CHECK_THROWS_AS(lv::parse_aomoto_id("X0/J1"), lv::Error);
  CHECK_THROWS_AS(lv::parse_aomoto_id("I0,/J1"), lv::Error);
  auto c = lv::aomoto_components(1);
  auto it = std::find_if(c.begin(), c.end(), [](const auto& x) { return x.id == "I0,1/J"; });
  REQUIRE(it != c.end());
  CHECK(it->variation_known_zero);
}

TEST_CASE("Aomoto edges agree with the general compatibility rule") {
  for (int n = 1; n <= 3; ++n) {
    auto comps = lv::aomoto_components(n);
    auto rel = lv::aomoto_edges(n);
    CHECK(rel.edges == lv::hierarchy_graph(comps).edges);
    for (std::size_t a = 0; a < comps.size(); ++a) CHECK(rel.edges.count({a, a}) == 0);
  }
  auto rel = lv::aomoto_edges(1);
  CHECK(rel.has_edge("I0/J1", "I0,1/J"));
  CHECK_FALSE(rel.has_edge("I0/J1", "I1/J0"));
  // Nothing enters a component with full J.
  for (const auto& [a, b] : rel.edge_list()) CHECK(b != "I/J0,1");
}

TEST_CASE("Aomoto longest admissible word") {
  for (int n = 1; n <= 3; ++n) {
    auto comps = lv::aomoto_components(n);
    auto rel = lv::aomoto_edges(n);
    // Longest path in edges among components with nonzero variation.
    std::vector<int> best(comps.size(), 1);
    std::vector<std::size_t> order(comps.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) {
      return lv::parse_aomoto_id(comps[a].id).I.size() > lv::parse_aomoto_id(comps[b].id).I.size();
    });
    int longest = 0;
    for (auto a : order) {
      if (comps[a].variation_known_zero) {
        best[a] = 0;
        continue;
      }
      for (auto [x, y] : rel.edges)
        if (x == a && !comps[y].variation_known_zero) best[a] = std::max(best[a], best[y] + 1);
      longest = std::max(longest, best[a]);
    }
    CHECK(longest == n);
  }
}

TEST_CASE("words longer than the weight are forced zero") {
  for (int n = 1; n <= 2; ++n) {
    auto comps = lv::aomoto_components(n);
    auto rel = lv::aomoto_edges(n);
    std::vector<std::size_t> idx(n + 1, 0);
    std::vector<std::string> word(n + 1);
    long checked = 0;
    while (true) {
      for (int k = 0; k <= n; ++k) word[k] = comps[idx[k]].id;
      CHECK(lv::word_vanishes(rel, comps, word).forced_zero);
      ++checked;
      int k = n;
      while (k >= 0 && ++idx[k] == comps.size()) idx[k--] = 0;
      if (k < 0) break;
    }
    long size = static_cast<long>(comps.size());
    CHECK(checked == (n == 1 ? size * size : size * size * size));
  }
}

TEST_CASE("weight one symbol") {
  auto ws = lv::aomoto_symbol(1);
  REQUIRE(ws.size() == 4);
  std::map<std::string, int> expected = {
      {"a(0|1)", 1}, {"a(0|0)", -1}, {"a(1|1)", -1}, {"a(1|0)", 1}};
  CHECK(signed_words(ws) == expected);
  CHECK(ws[0].sign == 1);
  CHECK(ws[0].sigma == std::vector<int>{0, 1});
}

TEST_CASE("symbol sizes, ordering and letters") {
  for (int n = 1; n <= 3; ++n) {
    auto ws = lv::aomoto_symbol(n);
    long f = 1;
    for (int i = 2; i <= n + 1; ++i) f *= i;
    CHECK(static_cast<long>(ws.size()) == f * f);
    for (std::size_t i = 1; i < ws.size(); ++i)
      CHECK(std::tie(ws[i - 1].sigma, ws[i - 1].tau) < std::tie(ws[i].sigma, ws[i].tau));
    for (const auto& w : ws) {
      REQUIRE(w.letters.size() == static_cast<std::size_t>(n));
      for (int k = 1; k <= n; ++k) {
        CHECK(w.letters[k - 1].I.size() == static_cast<std::size_t>(k));
        CHECK(w.letters[k - 1].J.size() == static_cast<std::size_t>(n + 1 - k));
      }
    }
  }
  auto w2 = lv::aomoto_symbol(2);
  CHECK(w2[0].text() == "a(0,1|2) (x) a(0|1,2)");
}

TEST_CASE("symbol antisymmetry under transpositions") {
  const int n = 3;
  auto ws = lv::aomoto_symbol(n);
  std::map<std::pair<std::vector<int>, std::vector<int>>, int> sign;
  for (const auto& w : ws) sign[{w.sigma, w.tau}] = w.sign;
  for (const auto& w : ws)
    for (int a = 0; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b) {
        auto s = w.sigma;
        std::swap(s[a], s[b]);
        CHECK(sign.at({s, w.tau}) == -w.sign);
        auto t = w.tau;
        std::swap(t[a], t[b]);
        CHECK(sign.at({w.sigma, t}) == -w.sign);
      }
}

TEST_CASE("symbol words are admissible maximal chains") {
  for (int n = 1; n <= 3; ++n) {
    auto comps = lv::aomoto_components(n);
    auto rel = lv::aomoto_edges(n);
    for (const auto& w : lv::aomoto_symbol(n)) CHECK_FALSE(lv::word_vanishes(rel, comps, w.component_word()).forced_zero);
  }
}

TEST_CASE("symbol is invariant under relabeling") {
  const int n = 2;
  auto ws = lv::aomoto_symbol(n);
  auto base = signed_words(ws);
  std::vector<int> pi(n + 1);
  std::iota(pi.begin(), pi.end(), 0);
  do {
    std::map<std::string, int> relabeled;
    for (const auto& w : ws) {
      lv::SymbolWord r = w;
      for (auto& l : r.letters) {
        std::set<int> I, J;
        for (int i : l.I) I.insert(pi[i]);
        for (int j : l.J) J.insert(pi[j]);
        l = {I, J};
      }
      relabeled[r.text()] += r.sign;
    }
    CHECK(relabeled == base);
  } while (std::next_permutation(pi.begin(), pi.end()));
}

TEST_CASE("maximal chain values") {
  CHECK(lv::maximal_chain_value(2, {0, 1, 2}, {0, 1, 2}).str() == "+(2 pi i)^2");
  CHECK(lv::maximal_chain_value(2, {0, 1, 2}, {1, 0, 2}).sign == -1);
  CHECK_THROWS_AS(lv::maximal_chain_value(2, {0, 1, 1}, {0, 1, 2}), lv::Error);
  CHECK_THROWS_AS(lv::maximal_chain_value(2, {0, 1}, {0, 1, 2}), lv::Error);
  auto ws = lv::aomoto_symbol(3);
  std::mt19937 rng(7);
  for (int k = 0; k < 50; ++k) {
    const auto& w = ws[rng() % ws.size()];
    CHECK(lv::maximal_chain_value(3, w.sigma, w.tau).sign == w.sign);
  }
  auto j = lv::symbol_to_json(1, lv::aomoto_symbol(1));
  CHECK(j["words"].size() == 4);
  CHECK(j["words"][0]["letters"][0] == "I0/J1");
}
