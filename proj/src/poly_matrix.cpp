#include "landauvar/poly_matrix.hpp"

#include <map>
#include <utility>

#include "landauvar/error.hpp"

namespace lv {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols) {}

PolyMatrix PolyMatrix::identity(std::size_t n) {
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Polynomial(1);
  return m;
}

PolyMatrix PolyMatrix::select(const std::vector<std::size_t>& rows,
                              const std::vector<std::size_t>& cols) const {
  PolyMatrix m(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = (*this)(rows[i], cols[j]);
  return m;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw Error("matrix product: dimension mismatch");
  PolyMatrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j)
      for (std::size_t k = 0; k < a.cols_; ++k) m(i, j) += a(i, k) * b(k, j);
  return m;
}

namespace {

Polynomial bareiss(PolyMatrix m) {
  const std::size_t n = m.rows();
  if (n == 0) return Polynomial(1);
  Polynomial prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      // Prefer the sparsest nonzero pivot below.
      std::size_t best = n;
      for (std::size_t i = k + 1; i < n; ++i)
        if (!m(i, k).is_zero() && (best == n || m(i, k).size() < m(best, k).size())) best = i;
      if (best == n) return Polynomial();
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(best, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial num = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        auto q = exact_quotient(num, prev);
        if (!q) throw Error("internal: Bareiss division was not exact");
        m(i, j) = std::move(*q);
      }
      m(i, k) = Polynomial();
    }
    prev = m(k, k);
  }
  Polynomial d = m(n - 1, n - 1);
  return negate ? -d : d;
}

// Laplace expansion along the first row, memoized on the set of columns.
Polynomial cofactor(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return Polynomial(1);
  if (n > 20) throw Error("cofactor expansion limited to 20x20");
  std::map<unsigned long, Polynomial> memo;
  auto rec = [&](auto& self, std::size_t row, unsigned long cols) -> Polynomial {
    if (row == n) return Polynomial(1);
    auto it = memo.find(cols);
    if (it != memo.end()) return it->second;
    Polynomial sum;
    int sign = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(cols & (1ul << j))) continue;
      if (!m(row, j).is_zero()) {
        Polynomial t = m(row, j) * self(self, row + 1, cols & ~(1ul << j));
        if (sign > 0) sum += t;
        else sum -= t;
      }
      sign = -sign;
    }
    memo.emplace(cols, sum);
    return sum;
  };
  return rec(rec, 0, (n == 64 ? ~0ul : (1ul << n) - 1));
}

}  // namespace

Polynomial determinant(const PolyMatrix& m, DetMethod method) {
  if (m.rows() != m.cols())
    throw Error("determinant of a non-square " + std::to_string(m.rows()) + "x" +
                std::to_string(m.cols()) + " matrix");
  return method == DetMethod::bareiss ? bareiss(m) : cofactor(m);
}

PolyMatrix sylvester_matrix(const Polynomial& a, const Polynomial& b, const std::string& var) {
  const unsigned da = a.degree(var), db = b.degree(var);
  if (da == 0 || db == 0)
    throw Error("resultant needs positive degree in '" + var + "' for both arguments");
  const std::size_t n = da + db;
  PolyMatrix s(n, n);
  for (unsigned r = 0; r < db; ++r)
    for (unsigned k = 0; k <= da; ++k) s(r, r + k) = a.coefficient(var, da - k);
  for (unsigned r = 0; r < da; ++r)
    for (unsigned k = 0; k <= db; ++k) s(db + r, r + k) = b.coefficient(var, db - k);
  return s;
}

Polynomial resultant(const Polynomial& a, const Polynomial& b, const std::string& var) {
  return determinant(sylvester_matrix(a, b, var));
}

}  // namespace lv
