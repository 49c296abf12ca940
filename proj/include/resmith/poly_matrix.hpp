#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "resmith/field.hpp"
#include "resmith/linalg.hpp"
#include "resmith/poly.hpp"

namespace resmith {

using PolyVector = std::vector<UniPoly>;

/// Dense matrix over F[y].
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(Field field, std::size_t rows, std::size_t cols);

  static PolyMatrix identity(const Field& field, std::size_t n);
  static PolyMatrix from_constant(const Matrix& m);
  static PolyMatrix from_rows(const Field& field, const std::vector<PolyVector>& rows);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  UniPoly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const UniPoly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyVector operator*(const PolyMatrix& a, const PolyVector& v);
  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
  PolyMatrix operator-() const;
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

  PolyMatrix transpose() const;
  Matrix eval(const Scalar& y0) const;
  PolyMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  /// Writes `block` with its top-left corner at (r, c).
  void set_block(std::size_t r, std::size_t c, const PolyMatrix& block);

  /// Fraction-free (Bareiss) determinant.
  UniPoly det() const;
  /// Rank over the fraction field F(y).
  std::size_t rank() const;
  int max_degree() const;

  std::vector<std::vector<std::string>> to_strings() const;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<UniPoly> data_;
};

PolyMatrix block_diag(const PolyMatrix& a, const PolyMatrix& b);
PolyVector to_poly_vector(const Vector& v);
Vector eval(const PolyVector& v, const Scalar& y0);
bool is_zero(const PolyVector& v);

}  // namespace resmith
