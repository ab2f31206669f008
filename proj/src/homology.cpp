#include "landauvar/homology.hpp"

#include <algorithm>
#include <sstream>

#include "landauvar/error.hpp"

namespace lv {

namespace {

int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<int>(r);
}

int parity_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

int open_rank(const PinchConfig& c, int d) {
  const int size_i = static_cast<int>(c.I.size());
  const int size_j = static_cast<int>(c.J.size());
  const bool full = static_cast<int>(c.I.size() + c.J.size() + c.K.size()) == c.m;
  if (!c.K.empty()) return full && d == c.n - size_i ? 1 : 0;
  if (!full) return binomial(size_j, d);
  int rank = d < size_j ? binomial(size_j, d) : 0;
  if (!c.linear()) {
    // unreduced homology of the vanishing sphere S^(n-m), shifted by |J|
    if (d == size_j) ++rank;
    if (d == size_j + c.n - c.m) ++rank;
  }
  return rank;
}

bool numeric(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

bool id_less(const std::string& a, const std::string& b) {
  if (numeric(a) && numeric(b) && a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

bool canonical_less(const Op& a, const Op& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  return id_less(a.id, b.id);
}

}  // namespace

void PinchConfig::validate() const {
  if (n < 0 || m < 1 || m > n + 1) throw Error("pinch needs 1 <= m <= n + 1");
  std::set<int> seen;
  for (const auto* part : {&I, &J, &K})
    for (int i : *part) {
      if (i < 1 || i > m) throw Error("hypersurface index out of range 1..m");
      if (!seen.insert(i).second) throw Error("I, J and K must be disjoint");
    }
}

std::pair<PinchConfig, int> dual_config(const PinchConfig& cfg, int degree) {
  PinchConfig d = cfg;
  std::swap(d.J, d.K);
  return {d, 2 * (cfg.n - static_cast<int>(cfg.I.size())) - degree};
}

int local_rank(const PinchConfig& cfg, int degree, Variant variant) {
  cfg.validate();
  if (variant == Variant::closed) {
    auto [d, deg] = dual_config(cfg, degree);
    return local_rank(d, deg, Variant::open);
  }
  if (degree < 0) return 0;
  return open_rank(cfg, degree);
}

OperatorWord parse_word(const std::string& text) {
  OperatorWord w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    Op op;
    std::size_t pos;
    if (tok.rfind("d", 0) == 0) {
      op.kind = OpKind::delta;
      pos = 1;
    } else if (tok.rfind("p", 0) == 0) {
      op.kind = OpKind::boundary;
      pos = 1;
    } else if (tok.rfind("w", 0) == 0) {
      op.kind = OpKind::varpi;
      pos = 1;
    } else if (tok.rfind("δ", 0) == 0) {
      op.kind = OpKind::delta;
      pos = std::string("δ").size();
    } else if (tok.rfind("∂", 0) == 0) {
      op.kind = OpKind::boundary;
      pos = std::string("∂").size();
    } else if (tok.rfind("ϖ", 0) == 0) {
      op.kind = OpKind::varpi;
      pos = std::string("ϖ").size();
    } else {
      throw Error("bad operator '" + tok + "'");
    }
    std::string rest = tok.substr(pos);
    auto colon = rest.find(':');
    op.id = rest.substr(0, colon);
    if (op.id.empty()) throw Error("operator '" + tok + "' has no hypersurface id");
    if (colon != std::string::npos) {
      std::string opt = rest.substr(colon + 1);
      if (opt.rfind("r=", 0) != 0) throw Error("bad option in '" + tok + "'");
      try {
        std::size_t used;
        op.r = std::stoi(opt.substr(2), &used);
        if (used != opt.size() - 2) throw Error("bad codimension in '" + tok + "'");
      } catch (const std::logic_error&) {
        throw Error("bad codimension in '" + tok + "'");
      }
      if (op.r < 1) throw Error("codimension must be positive in '" + tok + "'");
    }
    w.push_back(op);
  }
  return w;
}

std::string format_word(const OperatorWord& w) {
  std::string out;
  for (const auto& op : w) {
    if (!out.empty()) out += ' ';
    out += op.kind == OpKind::delta ? "d" : op.kind == OpKind::boundary ? "p" : "w";
    out += op.id;
    if (op.r != 2) out += ":r=" + std::to_string(op.r);
  }
  return out;
}

int op_degree(const Op& op) {
  switch (op.kind) {
    case OpKind::delta: return op.r - 1;
    case OpKind::boundary: return -1;
    case OpKind::varpi: return -op.r;
  }
  return 0;
}

int exchange_sign(const Op& a, const Op& b) {
  if (a.kind > b.kind) return exchange_sign(b, a);
  using K = OpKind;
  if (a.kind == K::boundary && b.kind == K::boundary) return -1;
  if (a.kind == K::delta && b.kind == K::delta) return parity_sign((a.r - 1) * (b.r - 1));
  if (a.kind == K::delta && b.kind == K::boundary) return parity_sign(a.r - 1);
  if (a.kind == K::delta && b.kind == K::varpi) return parity_sign((a.r - 1) * b.r);
  if (a.kind == K::boundary && b.kind == K::varpi) return parity_sign(b.r);
  return parity_sign(a.r * b.r);  // varpi, varpi
}

std::pair<int, OperatorWord> normalize_word(const OperatorWord& w) {
  OperatorWord v = w;
  int sign = 1;
  for (std::size_t pass = 0; pass < v.size(); ++pass)
    for (std::size_t k = 0; k + 1 < v.size(); ++k)
      if (canonical_less(v[k + 1], v[k])) {
        if (v[k].id == v[k + 1].id)
          throw Error("unsupported: exchanging two operators on hypersurface " + v[k].id);
        sign *= exchange_sign(v[k], v[k + 1]);
        std::swap(v[k], v[k + 1]);
      }
  return {sign, v};
}

int vanishing_cycle_sign(int size_j) {
  if (size_j < 0) throw Error("negative |J|");
  return parity_sign(static_cast<long>(size_j) * (size_j - 1) / 2);
}

int pairing_transfer_sign(int r, int n, int d, Transfer direction) {
  if (direction == Transfer::delta_to_boundary)
    return parity_sign(1 + static_cast<long>(r - 1) * (n - d));
  if (r != 2) throw Error("unsupported: boundary-to-coboundary transfer needs r = 2");
  return parity_sign(1 + d + n);
}

int pl_sign(int n) {
  if (n < 0) throw Error("negative fibre dimension");
  return parity_sign(static_cast<long>(n + 1) * (n + 2) / 2);
}

int partialK_reduction_sign(int n, int size_k) {
  if (n < 0 || size_k < 0) throw Error("negative argument");
  return parity_sign(static_cast<long>(n) * size_k + static_cast<long>(size_k) * (size_k + 1) / 2);
}

}  // namespace lv
