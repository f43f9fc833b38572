#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "hypercross/rational.hpp"

namespace hypercross {

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  /// Builds a matrix whose columns are the given vectors (all of equal length).
  static Matrix from_columns(const std::vector<RationalVector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalVector row(std::size_t r) const;
  RationalVector column(std::size_t c) const;

  Matrix transposed() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend RationalVector operator*(const Matrix& a, const RationalVector& v);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact determinant by rational Gaussian elimination.
/// Throws Error(kDimension) for non-square input.
Rational det(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Reduced row echelon form; `pivots` receives the pivot column of each
/// non-zero row.
Matrix rref(const Matrix& m, std::vector<std::size_t>* pivots = nullptr);

/// Basis of {v : m v = 0}. One vector per free column of the RREF, in
/// increasing column order, with that free variable set to 1 and the other
/// free variables set to 0.
std::vector<RationalVector> null_space_basis(const Matrix& m);

/// Solves the square system a x = b exactly. Throws Error(kDegenerate) when
/// `a` is singular.
RationalVector solve(const Matrix& a, const RationalVector& b);

}  // namespace hypercross
