#pragma once

#include <complex>
#include <gmpxx.h>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lv {

using Rational = mpq_class;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

// Sparse multivariate polynomial with exact rational coefficients.
//
// Variables are kept sorted by name and only variables that actually occur
// are stored, so equal polynomials have identical representations.  A term
// key is {total degree, e_1, ..., e_k}; ordering keys lexicographically is
// therefore graded-lex, and the last entry of the map is the leading term.
class Polynomial {
 public:
  using Key = std::vector<unsigned>;
  using TermMap = std::map<Key, Rational>;

  Polynomial() = default;
  Polynomial(long c);
  Polynomial(const Rational& c);

  static Polynomial variable(const std::string& name);
  static Polynomial parse(std::string_view text);

  const std::vector<std::string>& variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;
  bool depends_on(const std::string& var) const;

  unsigned degree(const std::string& var) const;
  unsigned total_degree() const;
  // Largest total degree over the given subset of variables.
  unsigned degree_in(const std::vector<std::string>& vars) const;
  bool is_homogeneous_in(const std::vector<std::string>& vars, unsigned d) const;

  // Coefficient of var^k, a polynomial in the remaining variables.
  Polynomial coefficient(const std::string& var, unsigned k) const;

  // Exponent of `var` in a term key (0 when var is absent).
  unsigned exponent(const Key& key, const std::string& var) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& b);
  Polynomial& operator-=(const Polynomial& b);
  Polynomial& operator*=(const Polynomial& b);
  Polynomial pow(unsigned e) const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  std::string str() const;

  Rational evaluate(const std::map<std::string, Rational>& values) const;
  std::complex<double> evaluate(const std::map<std::string, std::complex<double>>& values) const;

 private:
  friend Polynomial substitute(const Polynomial&, const std::map<std::string, Polynomial>&);
  friend Polynomial partial_derivative(const Polynomial&, const std::string&);
  friend std::optional<Polynomial> exact_quotient(const Polynomial&, const Polynomial&);

  TermMap remapped(const std::vector<std::string>& target) const;
  void trim();

  std::vector<std::string> vars_;
  TermMap terms_;
};

Polynomial partial_derivative(const Polynomial& a, const std::string& var);
Polynomial substitute(const Polynomial& a, const std::map<std::string, Polynomial>& bindings);

// Quotient q with a = d*q when it exists.  Throws on d = 0.
std::optional<Polynomial> exact_quotient(const Polynomial& a, const Polynomial& d);
bool divides(const Polynomial& d, const Polynomial& a, Polynomial* quotient = nullptr);

// a = c*b for a nonzero rational c.
bool proportional(const Polynomial& a, const Polynomial& b);

}  // namespace lv
