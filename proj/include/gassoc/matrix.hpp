#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace gassoc {

using Rational = mpq_class;

/// Dense row-major matrix over exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix from_ints(std::size_t rows, std::size_t cols, const std::vector<long>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const;
  Matrix operator*(const Matrix& rhs) const;
  bool operator==(const Matrix& rhs) const;
  bool is_zero() const;

  /// Rows [r0, r0+n) as a new matrix.
  Matrix row_block(std::size_t r0, std::size_t n) const;
  Matrix col_block(std::size_t c0, std::size_t n) const;

  /// Vertical / horizontal concatenation. Empty operands are allowed when
  /// their shared dimension is consistent.
  static Matrix vstack(const std::vector<Matrix>& blocks, std::size_t cols);
  static Matrix hstack(const std::vector<Matrix>& blocks, std::size_t rows);
  static Matrix block_diag(const Matrix& a, const Matrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form in place; returns pivot columns in scan order.
std::vector<std::size_t> rref(Matrix& m);

std::size_t rank(Matrix m);

/// Basis of {x : m x = 0} as columns of the returned (cols x k) matrix.
/// One basis vector per free column, free variable set to 1: deterministic.
Matrix nullspace(const Matrix& m);

/// Basis of {y : y m = 0} as rows of the returned (k x rows) matrix.
Matrix left_nullspace(const Matrix& m);

/// Determinant by fraction-exact elimination.
Rational determinant(Matrix m);

/// Solves a x = b for square nonsingular a; throws DomainError if singular.
std::vector<Rational> solve(const Matrix& a, const std::vector<Rational>& b);

}  // namespace gassoc
