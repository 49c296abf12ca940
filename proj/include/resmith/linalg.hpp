#pragma once

#include <cstddef>
#include <vector>

#include "resmith/field.hpp"

namespace resmith {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over a Field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(const Field& field, std::size_t n);
  /// Rows must share one length.
  static Matrix from_rows(const Field& field, const std::vector<Vector>& rows);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b);
  Matrix transpose() const;

  /// Reduced row echelon form, in place; returns the pivot columns.
  std::vector<std::size_t> rref();
  std::size_t rank() const;
  /// Basis of {v : A v = 0}, one vector per free column.
  std::vector<Vector> nullspace() const;
  /// DivisionByZero if singular.
  Matrix inverse() const;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

bool is_zero_vector(const Vector& v);
/// Rank of the matrix whose columns are `vectors`.
std::size_t rank_of(const Field& field, const std::vector<Vector>& vectors);

}  // namespace resmith
