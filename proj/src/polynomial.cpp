#include "landauvar/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "landauvar/error.hpp"

namespace lv {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  Rational q;
  try {
    if (slash == std::string::npos) {
      q = Rational(mpz_class(s, 10));
    } else {
      mpz_class num(s.substr(0, slash), 10);
      mpz_class den(s.substr(slash + 1), 10);
      if (den == 0) throw Error("zero denominator in '" + s + "'");
      q = Rational(num, den);
    }
  } catch (const std::invalid_argument&) {
    throw Error("not a rational number: '" + s + "'");
  }
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
  std::vector<std::string> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void add_term(Polynomial::TermMap& t, const Polynomial::Key& k, const Rational& c) {
  auto [it, inserted] = t.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) t.erase(it);
  }
}

}  // namespace

Polynomial::Polynomial(long c) : Polynomial(Rational(c)) {}

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) terms_.emplace(Key{0}, c);
}

Polynomial Polynomial::variable(const std::string& name) {
  Polynomial p;
  p.vars_ = {name};
  p.terms_.emplace(Key{1, 1}, Rational(1));
  return p;
}

bool Polynomial::is_constant() const { return vars_.empty(); }

Rational Polynomial::constant_value() const {
  if (!is_constant()) throw Error("polynomial is not constant: " + str());
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

bool Polynomial::depends_on(const std::string& var) const {
  return std::binary_search(vars_.begin(), vars_.end(), var);
}

unsigned Polynomial::exponent(const Key& key, const std::string& var) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  if (it == vars_.end() || *it != var) return 0;
  return key[1 + (it - vars_.begin())];
}

unsigned Polynomial::degree(const std::string& var) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  if (it == vars_.end() || *it != var) return 0;
  std::size_t i = 1 + (it - vars_.begin());
  unsigned d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, k[i]);
  return d;
}

unsigned Polynomial::total_degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first[0];
}

unsigned Polynomial::degree_in(const std::vector<std::string>& vars) const {
  unsigned best = 0;
  for (const auto& [k, c] : terms_) {
    unsigned d = 0;
    for (const auto& v : vars) d += exponent(k, v);
    best = std::max(best, d);
  }
  return best;
}

bool Polynomial::is_homogeneous_in(const std::vector<std::string>& vars, unsigned d) const {
  for (const auto& [k, c] : terms_) {
    unsigned e = 0;
    for (const auto& v : vars) e += exponent(k, v);
    if (e != d) return false;
  }
  return true;
}

Polynomial Polynomial::coefficient(const std::string& var, unsigned k) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  if (it == vars_.end() || *it != var) return k == 0 ? *this : Polynomial();
  std::size_t i = 1 + (it - vars_.begin());
  Polynomial out;
  out.vars_ = vars_;
  for (const auto& [key, c] : terms_) {
    if (key[i] != k) continue;
    Key nk = key;
    nk[i] = 0;
    nk[0] -= k;
    out.terms_.emplace(std::move(nk), c);
  }
  out.trim();
  return out;
}

Polynomial::TermMap Polynomial::remapped(const std::vector<std::string>& target) const {
  if (target == vars_) return terms_;
  std::vector<std::size_t> pos(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i)
    pos[i] = 1 + (std::lower_bound(target.begin(), target.end(), vars_[i]) - target.begin());
  TermMap out;
  for (const auto& [k, c] : terms_) {
    Key nk(target.size() + 1, 0);
    nk[0] = k[0];
    for (std::size_t i = 0; i < vars_.size(); ++i) nk[pos[i]] = k[i + 1];
    out.emplace(std::move(nk), c);
  }
  return out;
}

void Polynomial::trim() {
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [k, c] : terms_)
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (k[i + 1] != 0) used[i] = true;
  if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;
  std::vector<std::string> nv;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (used[i]) {
      nv.push_back(vars_[i]);
      keep.push_back(i + 1);
    }
  TermMap nt;
  for (auto& [k, c] : terms_) {
    Key nk(keep.size() + 1);
    nk[0] = k[0];
    for (std::size_t j = 0; j < keep.size(); ++j) nk[j + 1] = k[keep[j]];
    nt.emplace(std::move(nk), c);
  }
  vars_ = std::move(nv);
  terms_ = std::move(nt);
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& b) {
  if (b.is_zero()) return *this;
  if (vars_ != b.vars_) {
    auto nv = merge_vars(vars_, b.vars_);
    terms_ = remapped(nv);
    vars_ = std::move(nv);
    for (const auto& [k, c] : b.remapped(vars_)) add_term(terms_, k, c);
  } else {
    for (const auto& [k, c] : b.terms_) add_term(terms_, k, c);
  }
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& b) { return *this += -b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  if (a.is_zero() || b.is_zero()) return r;
  r.vars_ = merge_vars(a.vars_, b.vars_);
  Polynomial::TermMap ta = a.remapped(r.vars_);
  Polynomial::TermMap tb = b.remapped(r.vars_);
  Polynomial::Key k(r.vars_.size() + 1);
  for (const auto& [ka, ca] : ta)
    for (const auto& [kb, cb] : tb) {
      for (std::size_t i = 0; i < k.size(); ++i) k[i] = ka[i] + kb[i];
      add_term(r.terms_, k, ca * cb);
    }
  r.trim();
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& b) { return *this = *this * b; }

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(1), base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (k[i + 1] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (k[i + 1] > 1) mono += "^" + std::to_string(k[i + 1]);
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

Rational Polynomial::evaluate(const std::map<std::string, Rational>& values) const {
  std::vector<Rational> vals;
  for (const auto& v : vars_) {
    auto it = values.find(v);
    if (it == values.end()) throw Error("no value for variable '" + v + "'");
    vals.push_back(it->second);
  }
  Rational sum = 0;
  for (const auto& [k, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < vals.size(); ++i)
      for (unsigned e = 0; e < k[i + 1]; ++e) t *= vals[i];
    sum += t;
  }
  return sum;
}

std::complex<double> Polynomial::evaluate(
    const std::map<std::string, std::complex<double>>& values) const {
  std::vector<std::complex<double>> vals;
  for (const auto& v : vars_) {
    auto it = values.find(v);
    if (it == values.end()) throw Error("no value for variable '" + v + "'");
    vals.push_back(it->second);
  }
  std::complex<double> sum = 0;
  for (const auto& [k, c] : terms_) {
    std::complex<double> t = c.get_d();
    for (std::size_t i = 0; i < vals.size(); ++i)
      if (k[i + 1]) t *= std::pow(vals[i], static_cast<int>(k[i + 1]));
    sum += t;
  }
  return sum;
}

Polynomial partial_derivative(const Polynomial& a, const std::string& var) {
  auto it = std::lower_bound(a.vars_.begin(), a.vars_.end(), var);
  if (it == a.vars_.end() || *it != var) return Polynomial();
  std::size_t i = 1 + (it - a.vars_.begin());
  Polynomial out;
  out.vars_ = a.vars_;
  for (const auto& [k, c] : a.terms_) {
    if (k[i] == 0) continue;
    Polynomial::Key nk = k;
    nk[i] -= 1;
    nk[0] -= 1;
    out.terms_.emplace(std::move(nk), c * k[i]);
  }
  out.trim();
  return out;
}

Polynomial substitute(const Polynomial& a, const std::map<std::string, Polynomial>& bindings) {
  std::vector<const Polynomial*> bound(a.vars_.size(), nullptr);
  bool any = false;
  for (std::size_t i = 0; i < a.vars_.size(); ++i) {
    auto it = bindings.find(a.vars_[i]);
    if (it != bindings.end()) {
      bound[i] = &it->second;
      any = true;
    }
  }
  if (!any) return a;
  std::vector<std::map<unsigned, Polynomial>> powers(a.vars_.size());
  auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
    auto& cache = powers[i];
    auto it = cache.find(e);
    if (it == cache.end()) it = cache.emplace(e, bound[i]->pow(e)).first;
    return it->second;
  };
  Polynomial out;
  for (const auto& [k, c] : a.terms_) {
    Polynomial rest;
    rest.vars_ = a.vars_;
    Polynomial::Key rk = k;
    Polynomial factor(c);
    for (std::size_t i = 0; i < a.vars_.size(); ++i) {
      if (!bound[i] || k[i + 1] == 0) continue;
      factor *= power(i, k[i + 1]);
      rk[0] -= k[i + 1];
      rk[i + 1] = 0;
    }
    rest.terms_.emplace(std::move(rk), Rational(1));
    rest.trim();
    out += factor * rest;
  }
  return out;
}

std::optional<Polynomial> exact_quotient(const Polynomial& a, const Polynomial& d) {
  if (d.is_zero()) throw Error("division by the zero polynomial");
  Polynomial q;
  if (a.is_zero()) return q;
  std::vector<std::string> vars = merge_vars(a.vars_, d.vars_);
  Polynomial::TermMap r = a.remapped(vars);
  Polynomial::TermMap dt = d.remapped(vars);
  const auto& [dk, dc] = *dt.rbegin();
  q.vars_ = vars;
  Polynomial::Key m(vars.size() + 1), k(vars.size() + 1);
  while (!r.empty()) {
    const auto& [rk, rc] = *r.rbegin();
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (rk[i] < dk[i]) return std::nullopt;
      m[i] = rk[i] - dk[i];
    }
    Rational c = rc / dc;
    q.terms_.emplace(m, c);
    for (const auto& [tk, tc] : dt) {
      for (std::size_t i = 0; i < k.size(); ++i) k[i] = m[i] + tk[i];
      add_term(r, k, -c * tc);
    }
  }
  q.trim();
  return q;
}

bool divides(const Polynomial& d, const Polynomial& a, Polynomial* quotient) {
  auto q = exact_quotient(a, d);
  if (q && quotient) *quotient = *q;
  return q.has_value();
}

bool proportional(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return false;
  auto q = exact_quotient(a, b);
  return q && q->is_constant();
}

// Parser for the canonical grammar, extended with parentheses so that hand
// written inputs such as "(x1+x2)*(m1sq*x1 + m2sq*x2)" are accepted too.
namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw Error("polynomial parse error at offset " + std::to_string(pos_) + ": " + msg +
                " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Polynomial expr() {
    Polynomial acc;
    bool neg = false;
    if (accept('-')) neg = true;
    else accept('+');
    acc = neg ? -term() : term();
    while (true) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else break;
    }
    return acc;
  }
  Polynomial term() {
    Polynomial acc = power();
    while (true) {
      if (accept('*')) {
        acc *= power();
      } else if (accept('/')) {
        Polynomial den = power();
        if (!den.is_constant() || den.is_zero()) fail("division by a non-constant or zero");
        acc *= Polynomial(Rational(1) / den.constant_value());
      } else {
        break;
      }
    }
    return acc;
  }
  Polynomial power() {
    Polynomial base = atom();
    if (accept('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
    }
    return base;
  }
  Polynomial atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (c == '-') {
      ++pos_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Polynomial(parse_rational(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      return Polynomial::variable(std::string(s_.substr(start, pos_ - start)));
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text) { return Parser(text).parse(); }

}  // namespace lv
