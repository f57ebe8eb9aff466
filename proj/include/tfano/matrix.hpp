#pragma once

#include "tfano/arith.hpp"

#include <optional>
#include <vector>

namespace tfano {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c, T(0)) {}
  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw Error(ErrorCode::IncompatibleDimension, "ragged matrix");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
  }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw Error(ErrorCode::IncompatibleDimension, "matrix product");
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        if ((*this)(i, k) == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += (*this)(i, k) * o(k, j);
      }
    return r;
  }
  std::vector<T> operator*(const std::vector<T>& v) const {
    if (cols_ != v.size()) throw Error(ErrorCode::IncompatibleDimension, "matrix-vector product");
    std::vector<T> r(rows_, T(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
  }
  bool operator==(const Matrix& o) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

RatMatrix to_rat(const IntMatrix& m);

// Reduced row echelon form; pivots receives the pivot column of each nonzero row.
RatMatrix rref(RatMatrix m, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const RatMatrix& m);
std::size_t rank(const std::vector<RatVec>& rows, std::size_t cols);
// Basis of {x | m x = 0}.
std::vector<RatVec> nullspace(const RatMatrix& m);
std::optional<RatVec> solve(const RatMatrix& a, const RatVec& b);
Rational determinant(RatMatrix m);
Integer determinant(const IntMatrix& m);
std::optional<RatMatrix> inverse(const RatMatrix& m);

struct SmithForm {
  IntMatrix D, P, Q;  // P * M * Q = D
  std::size_t rank = 0;
};
SmithForm smith_normal_form(const IntMatrix& m);

// Lattice basis of {x in Z^n | m x = 0}.
std::vector<IntVec> integer_kernel(const IntMatrix& m);
// Lattice basis of span_Q(vectors) ∩ Z^n.
std::vector<IntVec> saturated_lattice_basis(const std::vector<RatVec>& vectors, std::size_t n);
bool in_row_lattice(const IntMatrix& b, const IntVec& x);
bool same_row_lattice(const IntMatrix& a, const IntMatrix& b);

}  // namespace tfano
