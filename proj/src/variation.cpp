#include "landauvar/variation.hpp"

#include <algorithm>

#include "landauvar/error.hpp"
#include "landauvar/homology.hpp"

namespace lv {

VarMatrix::VarMatrix(std::size_t n) : n_(n), a_(n * n, Rational(0)) {}

VarMatrix VarMatrix::identity(std::size_t n) {
  VarMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
  return m;
}

VarMatrix VarMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  VarMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw Error("matrix rows must be square");
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

bool VarMatrix::fully_known() const {
  return std::all_of(a_.begin(), a_.end(), [](const Entry& e) { return e.has_value(); });
}

bool VarMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Entry& e) { return e && *e == 0; });
}

std::vector<VarMatrix::Entry> VarMatrix::column(std::size_t j) const {
  std::vector<Entry> c;
  for (std::size_t i = 0; i < n_; ++i) c.push_back((*this)(i, j));
  return c;
}

VarMatrix operator*(const VarMatrix& a, const VarMatrix& b) {
  if (a.n_ != b.n_) throw Error("matrix size mismatch");
  VarMatrix c(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t j = 0; j < a.n_; ++j) {
      VarMatrix::Entry sum = Rational(0);
      for (std::size_t k = 0; k < a.n_; ++k) {
        const auto& x = a(i, k);
        const auto& y = b(k, j);
        if ((x && *x == 0) || (y && *y == 0)) continue;
        if (!x || !y) {
          sum.reset();
          break;
        }
        *sum += *x * *y;
      }
      c(i, j) = sum;
    }
  return c;
}

VarMatrix operator+(const VarMatrix& a, const VarMatrix& b) {
  if (a.n_ != b.n_) throw Error("matrix size mismatch");
  VarMatrix c(a.n_);
  for (std::size_t k = 0; k < a.a_.size(); ++k)
    c.a_[k] = a.a_[k] && b.a_[k] ? VarMatrix::Entry(*a.a_[k] + *b.a_[k]) : std::nullopt;
  return c;
}

VarMatrix operator-(const VarMatrix& a, const VarMatrix& b) {
  if (a.n_ != b.n_) throw Error("matrix size mismatch");
  VarMatrix c(a.n_);
  for (std::size_t k = 0; k < a.a_.size(); ++k)
    c.a_[k] = a.a_[k] && b.a_[k] ? VarMatrix::Entry(*a.a_[k] - *b.a_[k]) : std::nullopt;
  return c;
}

VarMatrix inverse(const VarMatrix& m) {
  if (!m.fully_known()) throw Error("cannot invert a matrix with unknown entries");
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = *m(i, j);
    a[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw Error("matrix is singular");
    std::swap(a[piv], a[col]);
    Rational inv = 1 / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (std::size_t r = 0; r < n; ++r)
      if (r != col && a[r][col] != 0) {
        Rational f = a[r][col];
        for (std::size_t k = 0; k < 2 * n; ++k) a[r][k] -= f * a[col][k];
      }
  }
  VarMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = a[i][n + j];
  return out;
}

std::string format_entry(const VarMatrix::Entry& e) { return e ? to_string(*e) : "?"; }

namespace {

bool in_span(const std::vector<std::vector<Rational>>& gens, const std::vector<Rational>& v) {
  // Rank of gens equals rank of gens + v.
  auto rank = [](std::vector<std::vector<Rational>> rows) {
    std::size_t r = 0;
    if (rows.empty()) return r;
    for (std::size_t c = 0; c < rows[0].size() && r < rows.size(); ++c) {
      std::size_t p = r;
      while (p < rows.size() && rows[p][c] == 0) ++p;
      if (p == rows.size()) continue;
      std::swap(rows[p], rows[r]);
      for (std::size_t i = r + 1; i < rows.size(); ++i)
        if (rows[i][c] != 0) {
          Rational f = rows[i][c] / rows[r][c];
          for (std::size_t k = c; k < rows[i].size(); ++k) rows[i][k] -= f * rows[r][k];
        }
      ++r;
    }
    return r;
  };
  auto with = gens;
  with.push_back(v);
  return rank(gens) == rank(with);
}

nlohmann::json entry_json(const VarMatrix::Entry& e) {
  return e ? nlohmann::json(to_string(*e)) : nlohmann::json(nullptr);
}

VarMatrix::Entry entry_from_json(const nlohmann::json& j) {
  if (j.is_null()) return std::nullopt;
  if (j.is_number_integer()) return Rational(j.get<long>());
  return parse_rational(j.get<std::string>());
}

}  // namespace

std::vector<std::string> VariationModel::component_ids() const {
  std::vector<std::string> out;
  for (const auto& c : components) out.push_back(c.id);
  return out;
}

const VarMatrix& VariationModel::op(const std::string& id) const {
  auto it = ops.find(id);
  if (it == ops.end()) throw Error("model " + name + " has no component '" + id + "'");
  return it->second;
}

std::size_t VariationModel::basis_index(const std::string& label) const {
  auto it = std::find(basis.begin(), basis.end(), label);
  if (it == basis.end()) throw Error("unknown basis element '" + label + "'");
  return static_cast<std::size_t>(it - basis.begin());
}

void VariationModel::validate() const {
  if (components.size() != ops.size()) throw Error(name + ": one matrix per component required");
  for (const auto& c : components) {
    c.validate();
    const auto& m = op(c.id);
    if (m.size() != basis.size()) throw Error(name + ": matrix size differs from basis size");
    if (c.variation_known_zero && !m.is_zero())
      throw Error(name + ": " + c.id + " has zero variation but a nonzero matrix");
  }
  for (const auto& [id, cycles] : vanishing_cycles) {
    const auto& m = op(id);
    for (const auto& v : cycles)
      if (v.size() != basis.size()) throw Error(name + ": vanishing cycle has wrong length");
    for (std::size_t j = 0; j < basis.size(); ++j) {
      auto col = m.column(j);
      if (!std::all_of(col.begin(), col.end(), [](const auto& e) { return e.has_value(); }))
        continue;
      std::vector<Rational> v;
      for (const auto& e : col) v.push_back(*e);
      if (!in_span(cycles, v))
        throw Error(name + ": image of " + basis[j] + " under " + id +
                    " leaves the span of its vanishing cycles");
    }
  }
  for (const auto* labels : {&boundary_K, &coboundary_J})
    for (const auto& [label, s] : *labels) basis_index(label);
}

nlohmann::json VariationModel::to_json() const {
  nlohmann::json j;
  j["name"] = name;
  j["n"] = n;
  j["basis"] = basis;
  j["components"] = nlohmann::json::array();
  for (const auto& c : components) j["components"].push_back(c.to_json());
  j["ops"] = nlohmann::json::object();
  for (const auto& c : components) {
    const auto& m = op(c.id);
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < m.size(); ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t k = 0; k < m.size(); ++k) row.push_back(entry_json(m(r, k)));
      rows.push_back(row);
    }
    j["ops"][c.id] = rows;
  }
  j["vanishing_cycles"] = nlohmann::json::object();
  for (const auto& [id, cycles] : vanishing_cycles) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& v : cycles) {
      nlohmann::json vec = nlohmann::json::array();
      for (const auto& x : v) vec.push_back(to_string(x));
      list.push_back(vec);
    }
    j["vanishing_cycles"][id] = list;
  }
  j["boundary_K"] = boundary_K;
  j["coboundary_J"] = coboundary_J;
  j["conventions"] = conventions;
  return j;
}

VariationModel VariationModel::from_json(const nlohmann::json& j) {
  VariationModel m;
  try {
    m.name = j.at("name").get<std::string>();
    m.n = j.at("n").get<int>();
    m.basis = j.at("basis").get<std::vector<std::string>>();
    for (const auto& c : j.at("components")) m.components.push_back(LandauComponent::from_json(c));
    for (const auto& [id, rows] : j.at("ops").items()) {
      VarMatrix mat(m.basis.size());
      if (rows.size() != m.basis.size()) throw Error("matrix for " + id + " has wrong size");
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.basis.size()) throw Error("matrix for " + id + " has wrong size");
        for (std::size_t k = 0; k < rows[r].size(); ++k) mat(r, k) = entry_from_json(rows[r][k]);
      }
      m.ops[id] = mat;
    }
    if (j.contains("vanishing_cycles"))
      for (const auto& [id, list] : j["vanishing_cycles"].items())
        for (const auto& v : list) {
          std::vector<Rational> vec;
          for (const auto& x : v) vec.push_back(*entry_from_json(x));
          m.vanishing_cycles[id].push_back(vec);
        }
    if (j.contains("boundary_K"))
      m.boundary_K = j["boundary_K"].get<std::map<std::string, std::set<std::string>>>();
    if (j.contains("coboundary_J"))
      m.coboundary_J = j["coboundary_J"].get<std::map<std::string, std::set<std::string>>>();
    if (j.contains("conventions")) m.conventions = j["conventions"].get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& ex) {
    throw Error(std::string("malformed model JSON: ") + ex.what());
  }
  m.validate();
  return m;
}

VarMatrix pl_operator(int n, const std::vector<Rational>& vanishing_cycle,
                      const std::vector<Rational>& dual_row) {
  if (vanishing_cycle.size() != dual_row.size())
    throw Error("vanishing cycle and intersection row differ in length");
  const std::size_t k = dual_row.size();
  VarMatrix m(k);
  const int s = pl_sign(n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m(i, j) = s * vanishing_cycle[i] * dual_row[j];
  return m;
}

VarMatrix compose_partial(const VariationModel& model, const std::vector<std::string>& word) {
  VarMatrix acc = VarMatrix::identity(model.basis.size());
  for (const auto& id : word) acc = model.op(id) * acc;
  return acc;
}

VarMatrix compose(const VariationModel& model, const std::vector<std::string>& word) {
  VarMatrix m = compose_partial(model, word);
  if (!m.fully_known()) {
    std::string w;
    for (const auto& id : word) w += (w.empty() ? "" : ",") + id;
    throw Error("composition " + w + " depends on entries the model leaves unknown");
  }
  return m;
}

namespace {

template <class F>
void for_each_word(const std::vector<std::string>& ids, int len, F&& f) {
  if (ids.empty()) return;
  std::vector<std::size_t> idx(len, 0);
  std::vector<std::string> word(len);
  while (true) {
    for (int k = 0; k < len; ++k) word[k] = ids[idx[k]];
    if (!f(word)) return;
    int k = len - 1;
    while (k >= 0 && ++idx[k] == ids.size()) idx[k--] = 0;
    if (k < 0) return;
  }
}

}  // namespace

std::optional<int> nilpotency_index(const VariationModel& model, const std::vector<std::string>& ids,
                                    int cutoff) {
  for (const auto& id : ids) model.op(id);
  for (int len = 1; len <= cutoff; ++len) {
    bool all_zero = true;
    for_each_word(ids, len, [&](const std::vector<std::string>& w) {
      all_zero = compose_partial(model, w).is_zero();
      return all_zero;
    });
    if (all_zero) return len;
  }
  return std::nullopt;
}

nlohmann::json AuditReport::to_json() const {
  auto list = [](const std::vector<AuditEntry>& es) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& e : es) a.push_back({{"word", e.word}, {"reason", e.reason}});
    return a;
  };
  return {{"words_checked", words_checked},
          {"forced_zero", forced_zero},
          {"violations", list(violations)},
          {"undetermined", list(undetermined)}};
}

AuditReport check_against_hierarchy(const VariationModel& model, const HierarchyRelation& rel,
                                    int max_len) {
  AuditReport report;
  auto ids = model.component_ids();
  for (const auto& id : ids) rel.index(id);
  for (int len = 1; len <= max_len; ++len)
    for_each_word(ids, len, [&](const std::vector<std::string>& w) {
      ++report.words_checked;
      auto verdict = word_vanishes(rel, model.components, w);
      if (!verdict.forced_zero) return true;
      ++report.forced_zero;
      auto m = compose_partial(model, w);
      if (m.is_zero()) return true;
      bool known_nonzero = false;
      for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
          if (m(i, j) && *m(i, j) != 0) known_nonzero = true;
      (known_nonzero ? report.violations : report.undetermined).push_back({w, verdict.reason});
      return true;
    });
  return report;
}

namespace {

using Vec = std::vector<Rational>;

Vec unit(std::size_t n, std::size_t i, long c = 1) {
  Vec v(n, Rational(0));
  v[i] = c;
  return v;
}

// Sets column `col` of m to v.
void set_image(VarMatrix& m, std::size_t col, const Vec& v) {
  for (std::size_t i = 0; i < v.size(); ++i) m(i, col) = v[i];
}

Vec combo(std::size_t n, std::initializer_list<std::pair<std::size_t, long>> terms) {
  Vec v(n, Rational(0));
  for (auto [i, c] : terms) v[i] += c;
  return v;
}

VariationModel logarithm_model() {
  VariationModel m;
  m.name = "logarithm";
  m.n = 1;
  m.basis = {"sigma", "nu"};
  m.components = fixture_landau("logarithm");
  VarMatrix v(2);
  set_image(v, 0, unit(2, 1));
  m.ops["l0"] = VarMatrix(2);
  m.ops["l1"] = v;
  m.ops["linf"] = v;
  m.vanishing_cycles["l1"] = {unit(2, 1)};
  m.vanishing_cycles["linf"] = {unit(2, 1)};
  m.boundary_K = {{"sigma", {"B1", "B2"}}, {"nu", {}}};
  m.coboundary_J = {{"sigma", {}}, {"nu", {"A1"}}};
  return m;
}

VariationModel bubble_model() {
  VariationModel m;
  m.name = "bubble";
  m.n = 1;
  m.basis = {"sigma", "nu1", "nu2"};
  m.components = fixture_landau("bubble");
  const std::size_t s = 0, n1 = 1, n2 = 2;
  Vec nu_delta = combo(3, {{n2, 1}, {n1, -1}});

  VarMatrix l1(3), l2(3), dp(3), dm(3);
  set_image(l1, s, combo(3, {{n1, -1}}));
  set_image(l2, s, unit(3, n2));
  for (auto* d : {&dp, &dm}) {
    set_image(*d, n1, nu_delta);
    set_image(*d, n2, combo(3, {{n1, 1}, {n2, -1}}));
  }
  set_image(dp, s, nu_delta);
  m.ops = {{"l1", l1}, {"l2", l2}, {"lD+", dp}, {"lD-", dm}, {"lp", VarMatrix(3)}};
  m.vanishing_cycles = {
      {"l1", {unit(3, n1)}}, {"l2", {unit(3, n2)}}, {"lD+", {nu_delta}}, {"lD-", {nu_delta}}};
  m.boundary_K = {{"sigma", {"B_e1", "B_e2"}}, {"nu1", {}}, {"nu2", {}}};
  m.coboundary_J = {{"sigma", {}}, {"nu1", {"A2"}}, {"nu2", {"A2"}}};
  return m;
}

VariationModel dilog_model() {
  VariationModel m;
  m.name = "dilog";
  m.n = 2;
  m.basis = {"sigma", "nu_p1", "nu_p0"};
  m.components = fixture_landau("dilog");
  VarMatrix v1(3), v0(3);
  set_image(v1, 0, combo(3, {{1, -1}}));
  set_image(v0, 1, unit(3, 2));
  auto id = VarMatrix::identity(3);
  // The loop around infinity is the inverse of the product of the loops
  // around 1 and 0.
  VarMatrix vinf = inverse((id + v1) * (id + v0)) - id;
  m.ops = {{"l0", v0}, {"l1", v1}, {"linf", vinf}};
  m.vanishing_cycles = {{"l1", {unit(3, 1)}}, {"l0", {unit(3, 2)}}};
  m.conventions = {"M_inf = (M_1 M_0)^-1 with M = I + Var"};
  return m;
}

VariationModel massless_triangle_model() {
  VariationModel m;
  m.name = "massless-triangle";
  m.n = 2;
  m.basis = {"sigma", "nu1", "nu2", "nu3", "mu"};
  m.components = fixture_landau("massless-triangle");
  const std::size_t mu = 4;
  for (std::size_t i = 1; i <= 3; ++i) {
    VarMatrix v(5);
    set_image(v, 0, unit(5, i));
    for (std::size_t j = 1; j <= 3; ++j)
      if (j != i) set_image(v, j, unit(5, mu, j > i ? 1 : -1));
    std::string id = "l" + std::to_string(i);
    m.ops[id] = v;
    m.vanishing_cycles[id] = {unit(5, i), unit(5, mu)};
  }
  // Var_ld maps everything into the span of mu = nu_delta / 2 and acts on
  // mu by -2; its other coefficients are not determined.
  VarMatrix d(5);
  for (std::size_t j = 0; j < 4; ++j) d(mu, j).reset();
  d(mu, mu) = Rational(-2);
  m.ops["ld"] = d;
  m.vanishing_cycles["ld"] = {unit(5, mu)};
  m.conventions = {"Var_li nu_j = sign(j - i) mu for i != j"};
  return m;
}

}  // namespace

VariationModel builtin_model(const std::string& name) {
  VariationModel m;
  if (name == "logarithm")
    m = logarithm_model();
  else if (name == "bubble")
    m = bubble_model();
  else if (name == "dilog")
    m = dilog_model();
  else if (name == "massless-triangle")
    m = massless_triangle_model();
  else
    throw Error("unknown variation model '" + name + "'");
  m.validate();
  return m;
}

std::vector<std::string> builtin_model_names() {
  return {"bubble", "dilog", "logarithm", "massless-triangle"};
}

}  // namespace lv
