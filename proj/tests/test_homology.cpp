#include <algorithm>
#include <random>

#include "doctest.h"
#include "landauvar/error.hpp"
#include "landauvar/homology.hpp"

using lv::OpKind;
using lv::PinchConfig;
using lv::Variant;

namespace {

PinchConfig cfg(int n, int m, std::set<int> I, std::set<int> J, std::set<int> K) {
  return {n, m, std::move(I), std::move(J), std::move(K)};
}

// Every valid configuration with fibre dimension <= 5.
std::vector<PinchConfig> all_configs() {
  std::vector<PinchConfig> out;
  for (int n = 0; n <= 5; ++n)
    for (int m = 1; m <= n + 1; ++m) {
      int total = 1;
      for (int i = 0; i < m; ++i) total *= 4;
      for (int code = 0; code < total; ++code) {
        PinchConfig c{n, m, {}, {}, {}};
        int x = code;
        for (int i = 1; i <= m; ++i, x /= 4) {
          if (x % 4 == 1) c.I.insert(i);
          if (x % 4 == 2) c.J.insert(i);
          if (x % 4 == 3) c.K.insert(i);
        }
        out.push_back(c);
      }
    }
  return out;
}

long choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// Poincare polynomial of the open local group, coefficient list by degree.
std::vector<long> expected_poincare(const PinchConfig& c) {
  std::vector<long> p(2 * c.n + 3, 0);
  int i = c.I.size(), j = c.J.size();
  bool full = static_cast<int>(c.I.size() + c.J.size() + c.K.size()) == c.m;
  if (!c.K.empty()) {
    if (full) p[c.n - i] = 1;
    return p;
  }
  for (int d = 0; d <= j; ++d) p[d] = choose(j, d);  // (1 + z)^|J|
  if (full) {
    p[j] -= 1;  // top cell replaced by the suspended sphere
    if (c.m <= c.n) {
      p[j] += 1;
      p[j + c.n - c.m] += 1;
    }
  }
  return p;
}

int sign_of(int e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

TEST_CASE("local rank examples") {
  CHECK(lv::local_rank(cfg(1, 2, {}, {1}, {2}), 1, Variant::open) == 1);
  CHECK(lv::local_rank(cfg(1, 2, {}, {1}, {2}), 0, Variant::open) == 0);
  CHECK(lv::local_rank(cfg(3, 1, {1}, {}, {}), 0, Variant::open) == 1);
  CHECK(lv::local_rank(cfg(3, 1, {1}, {}, {}), 1, Variant::open) == 0);
  CHECK(lv::local_rank(cfg(3, 1, {1}, {}, {}), 2, Variant::open) == 1);
  CHECK(lv::local_rank(cfg(2, 3, {1}, {2, 3}, {}), 1, Variant::open) == 2);
  // closed variant, all of I, J, K used with J nonempty: rank one in degree n - |I|
  CHECK(lv::local_rank(cfg(2, 3, {1}, {2}, {3}), 1, Variant::closed) == 1);
  CHECK(lv::local_rank(cfg(2, 3, {}, {1, 2, 3}, {}), 2, Variant::closed) == 1);
  CHECK(lv::local_rank(cfg(2, 3, {}, {1}, {2}), 1, Variant::open) == 0);
  // n = m: the vanishing sphere is S^0, two points in degree |J|
  CHECK(lv::local_rank(cfg(2, 2, {}, {1, 2}, {}), 2, Variant::open) == 2);
}

TEST_CASE("local ranks for every configuration with n <= 5") {
  auto configs = all_configs();
  CHECK(configs.size() > 5000);
  for (const auto& c : configs) {
    auto p = expected_poincare(c);
    for (int d = -1; d <= 2 * c.n + 2; ++d) {
      long want = d >= 0 && d < static_cast<int>(p.size()) ? p[d] : 0;
      int got = lv::local_rank(c, d, Variant::open);
      if (got != want) {
        CAPTURE(c.n);
        CAPTURE(c.m);
        CAPTURE(d);
        CHECK(got == want);
      }
      auto [dc, dd] = lv::dual_config(c, d);
      auto [ddc, ddd] = lv::dual_config(dc, dd);
      if (!(ddd == d && ddc.J == c.J && ddc.K == c.K && ddc.I == c.I)) FAIL("not an involution");
      if (lv::local_rank(dc, dd, Variant::closed) != got) FAIL("duality broken");
      if (lv::local_rank(c, d, Variant::closed) != lv::local_rank(dc, dd, Variant::open))
        FAIL("closed variant is not the dual open rank");
    }
  }
}

TEST_CASE("sum and Euler characteristic rules") {
  for (const auto& c : all_configs()) {
    if (!c.K.empty()) continue;
    int j = c.J.size();
    bool full = static_cast<int>(c.I.size() + c.J.size()) == c.m;
    long euler = 0;
    std::vector<long> ranks;
    for (int d = 0; d <= 2 * c.n + 2; ++d) {
      ranks.push_back(lv::local_rank(c, d, Variant::open));
      euler += sign_of(d) * ranks.back();
    }
    if (!full) {
      for (int d = 0; d < static_cast<int>(ranks.size()); ++d) CHECK(ranks[d] == choose(j, d));
    } else if (!c.linear()) {
      long rhs = sign_of(j) * (1 + sign_of(c.n - c.m));
      for (int d = 0; d < j; ++d) rhs += sign_of(d) * choose(j, d);
      CHECK(euler == rhs);
    }
  }
}

TEST_CASE("malformed partitions") {
  CHECK_THROWS_AS(lv::local_rank(cfg(1, 3, {}, {}, {}), 0, Variant::open), lv::Error);
  CHECK_THROWS_AS(lv::local_rank(cfg(2, 2, {1}, {1}, {}), 0, Variant::open), lv::Error);
  CHECK_THROWS_AS(lv::local_rank(cfg(2, 2, {}, {3}, {}), 0, Variant::open), lv::Error);
  CHECK_THROWS_AS(lv::local_rank(cfg(2, 0, {}, {}, {}), 0, Variant::open), lv::Error);
}

TEST_CASE("operator word parsing") {
  auto w = lv::parse_word("d1 p2 d3:r=2 w4:r=3");
  REQUIRE(w.size() == 4);
  CHECK(w[0] == lv::Op{OpKind::delta, "1", 2});
  CHECK(w[1] == lv::Op{OpKind::boundary, "2", 2});
  CHECK(w[3] == lv::Op{OpKind::varpi, "4", 3});
  CHECK(lv::format_word(w) == "d1 p2 d3 w4:r=3");
  CHECK(lv::parse_word("δ1 ∂2 ϖ3") == lv::parse_word("d1 p2 w3"));
  CHECK(lv::parse_word("").empty());
  CHECK_THROWS_AS(lv::parse_word("x1"), lv::Error);
  CHECK_THROWS_AS(lv::parse_word("d"), lv::Error);
  CHECK_THROWS_AS(lv::parse_word("d1:r=0"), lv::Error);
  CHECK_THROWS_AS(lv::parse_word("d1:q=2"), lv::Error);
  CHECK_THROWS_AS(lv::parse_word("d1:r=2x"), lv::Error);
}

TEST_CASE("word normalization examples") {
  auto [s1, w1] = lv::normalize_word(lv::parse_word("p2 p1"));
  CHECK(s1 == -1);
  CHECK(w1 == lv::parse_word("p1 p2"));
  CHECK(lv::normalize_word(lv::parse_word("d2 d1")).first == -1);
  CHECK(lv::normalize_word(lv::parse_word("d2:r=3 d1")).first == 1);
  auto [s0, w0] = lv::normalize_word({});
  CHECK(s0 == 1);
  CHECK(w0.empty());
  CHECK(lv::normalize_word(lv::parse_word("w1 p2 d3")).second == lv::parse_word("d3 p2 w1"));
  CHECK(lv::normalize_word(lv::parse_word("d10 d9")).second == lv::parse_word("d9 d10"));
  CHECK_THROWS_AS(lv::normalize_word(lv::parse_word("p1 d1")), lv::Error);
  CHECK(lv::normalize_word(lv::parse_word("p1 p1")).first == 1);
}

TEST_CASE("normalization sign is the graded-commutativity sign over all orders") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> kind(0, 2), codim(1, 4);
  for (int trial = 0; trial < 40; ++trial) {
    lv::OperatorWord base;
    for (int i = 0; i < 5; ++i)
      base.push_back({static_cast<OpKind>(kind(rng)), std::to_string(i + 1), codim(rng)});
    auto canonical = lv::normalize_word(base).second;
    auto position = [&](const lv::Op& op) {
      return std::find(canonical.begin(), canonical.end(), op) - canonical.begin();
    };
    std::vector<int> perm{0, 1, 2, 3, 4};
    int count = 0;
    do {
      lv::OperatorWord w;
      for (int p : perm) w.push_back(base[p]);
      int expect = 1;
      for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b)
          if (position(w[a]) > position(w[b]))
            expect *= sign_of(lv::op_degree(w[a]) * lv::op_degree(w[b]));
      auto [sign, norm] = lv::normalize_word(w);
      CHECK(norm == canonical);
      CHECK(sign == expect);
      ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(count == 120);
  }
}

TEST_CASE("exchange rules") {
  auto op = [](OpKind k, int r) { return lv::Op{k, "1", r}; };
  for (int ri = 1; ri <= 4; ++ri)
    for (int rj = 1; rj <= 4; ++rj) {
      auto d_i = op(OpKind::delta, ri), d_j = op(OpKind::delta, rj);
      auto p_i = op(OpKind::boundary, ri);
      auto w_i = op(OpKind::varpi, ri), w_j = op(OpKind::varpi, rj);
      CHECK(lv::exchange_sign(p_i, op(OpKind::boundary, rj)) == -1);
      CHECK(lv::exchange_sign(d_i, d_j) == sign_of((ri - 1) * (rj - 1)));
      CHECK(lv::exchange_sign(p_i, d_j) == sign_of(rj - 1));
      CHECK(lv::exchange_sign(d_i, w_j) == sign_of((ri - 1) * rj));
      CHECK(lv::exchange_sign(p_i, w_j) == sign_of(rj));
      CHECK(lv::exchange_sign(w_i, w_j) == sign_of(ri * rj));
      CHECK(lv::exchange_sign(d_j, p_i) == lv::exchange_sign(p_i, d_j));
    }
}

TEST_CASE("orientation signs") {
  CHECK(lv::vanishing_cycle_sign(0) == 1);
  CHECK(lv::vanishing_cycle_sign(1) == 1);
  CHECK(lv::vanishing_cycle_sign(2) == -1);
  CHECK(lv::vanishing_cycle_sign(3) == -1);
  CHECK(lv::vanishing_cycle_sign(4) == 1);

  CHECK(lv::pl_sign(0) == -1);
  CHECK(lv::pl_sign(1) == -1);
  CHECK(lv::pl_sign(2) == 1);
  CHECK(lv::pl_sign(3) == 1);

  CHECK(lv::partialK_reduction_sign(1, 1) == 1);
  CHECK(lv::partialK_reduction_sign(3, 0) == 1);
  CHECK(lv::partialK_reduction_sign(2, 2) == -1);
}

TEST_CASE("pairing transfer signs") {
  using lv::Transfer;
  CHECK(lv::pairing_transfer_sign(2, 2, 1, Transfer::delta_to_boundary) == 1);
  CHECK(lv::pairing_transfer_sign(2, 4, 0, Transfer::delta_to_boundary) == -1);
  CHECK(lv::pairing_transfer_sign(3, 4, 1, Transfer::delta_to_boundary) == -1);
  for (int n : {0, 2, 4, 6})
    for (int d = 0; d <= 6; ++d) {
      CHECK(lv::pairing_transfer_sign(2, n, d, Transfer::delta_to_boundary) == sign_of(1 + d));
      CHECK(lv::pairing_transfer_sign(2, n, d, Transfer::boundary_to_delta) == sign_of(1 + d));
    }
  // <∂x, y> in S (dim n-2): swap in S, move δ across, swap back in M.
  for (int n = 2; n <= 7; ++n)
    for (int d = 1; d < n; ++d) {
      int swap_s = sign_of((d - 1) * (n - 2 - (d - 1)));
      int move = lv::pairing_transfer_sign(2, n, n - d - 1, Transfer::delta_to_boundary);
      int swap_m = sign_of(d * (n - d));
      CHECK(lv::pairing_transfer_sign(2, n, d, Transfer::boundary_to_delta) ==
            swap_s * move * swap_m);
    }
  CHECK_THROWS_AS(lv::pairing_transfer_sign(3, 4, 1, Transfer::boundary_to_delta), lv::Error);
}
