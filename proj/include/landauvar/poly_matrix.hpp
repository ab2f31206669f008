#pragma once

#include <cstddef>
#include <vector>

#include "landauvar/polynomial.hpp"

namespace lv {

// Dense matrix of polynomials.  Entries are aligned on demand by the
// polynomial operations, so no shared variable list is stored.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols);
  static PolyMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Polynomial& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Polynomial& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  // Submatrix keeping the listed rows and columns, in the given order.
  PolyMatrix select(const std::vector<std::size_t>& rows,
                    const std::vector<std::size_t>& cols) const;
  PolyMatrix transpose() const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Polynomial> a_;
};

enum class DetMethod { bareiss, cofactor };

Polynomial determinant(const PolyMatrix& m, DetMethod method = DetMethod::bareiss);

// Sylvester matrix of a and b with respect to var, rows of a first.
PolyMatrix sylvester_matrix(const Polynomial& a, const Polynomial& b, const std::string& var);
Polynomial resultant(const Polynomial& a, const Polynomial& b, const std::string& var);

}  // namespace lv
