#include "resmith/poly_matrix.hpp"

#include <algorithm>

#include "resmith/error.hpp"

namespace resmith {

PolyMatrix::PolyMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, UniPoly(field)) {}

PolyMatrix PolyMatrix::identity(const Field& field, std::size_t n) {
  PolyMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = UniPoly::constant(field.one());
  return m;
}

PolyMatrix PolyMatrix::from_constant(const Matrix& c) {
  PolyMatrix m(c.field(), c.rows(), c.cols());
  for (std::size_t i = 0; i < c.rows(); ++i) {
    for (std::size_t j = 0; j < c.cols(); ++j) m(i, j) = UniPoly::constant(c(i, j));
  }
  return m;
}

PolyMatrix PolyMatrix::from_rows(const Field& field, const std::vector<PolyVector>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  PolyMatrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorCode::DimensionMismatch, "ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "polynomial matrix product");
  PolyMatrix r(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const UniPoly& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) r(i, j) += aik * b(k, j);
      }
    }
  }
  return r;
}

PolyVector operator*(const PolyMatrix& a, const PolyVector& v) {
  if (a.cols_ != v.size()) throw Error(ErrorCode::DimensionMismatch, "polynomial matrix-vector product");
  PolyVector r(a.rows_, UniPoly(a.field_));
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < a.cols_; ++j) {
      if (!a(i, j).is_zero() && !v[j].is_zero()) r[i] += a(i, j) * v[j];
    }
  }
  return r;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix sum");
  PolyMatrix r = a;
  for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] += b.data_[k];
  return r;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) { return a + (-b); }

PolyMatrix PolyMatrix::operator-() const {
  PolyMatrix r = *this;
  for (auto& e : r.data_) e = -e;
  return r;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Matrix PolyMatrix::eval(const Scalar& y0) const {
  Matrix m(field_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j)(y0);
  }
  return m;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
  PolyMatrix m(field_, rs.size(), cs.size());
  for (std::size_t i = 0; i < rs.size(); ++i) {
    for (std::size_t j = 0; j < cs.size(); ++j) m(i, j) = (*this)(rs[i], cs[j]);
  }
  return m;
}

void PolyMatrix::set_block(std::size_t r, std::size_t c, const PolyMatrix& block) {
  if (r + block.rows_ > rows_ || c + block.cols_ > cols_) throw Error(ErrorCode::DimensionMismatch, "block");
  for (std::size_t i = 0; i < block.rows_; ++i) {
    for (std::size_t j = 0; j < block.cols_; ++j) (*this)(r + i, c + j) = block(i, j);
  }
}

namespace {

// Fraction-free echelon elimination with column skipping. Returns the rank
// and, for square input of full rank, the determinant in `det`.
std::size_t bareiss(std::vector<UniPoly> a, std::size_t rows, std::size_t cols, UniPoly* det) {
  const Field field = a.empty() ? Field::rationals() : a.front().field();
  auto at = [&](std::size_t i, std::size_t j) -> UniPoly& { return a[i * cols + j]; };
  UniPoly prev = UniPoly::constant(field.one());
  bool negate = false;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // smallest-degree nonzero pivot keeps intermediate degrees down
    std::size_t p = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (!at(i, c).is_zero() && (p == rows || at(i, c).degree() < at(p, c).degree())) p = i;
    }
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(p, j), at(r, j));
      negate = !negate;
    }
    const UniPoly piv = at(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const UniPoly lead = at(i, c);
      for (std::size_t j = c + 1; j < cols; ++j) {
        UniPoly v = piv * at(i, j) - lead * at(r, j);
        auto q = v.divide_exact(prev);
        if (!q) throw Error(ErrorCode::InternalInconsistency, "inexact Bareiss division");
        at(i, j) = std::move(*q);
      }
      at(i, c) = UniPoly(field);
    }
    prev = piv;
    ++r;
  }
  if (det) {
    if (r < rows || rows != cols) {
      *det = UniPoly(field);
    } else {
      *det = rows == 0 ? UniPoly::constant(field.one()) : at(rows - 1, cols - 1);
      if (negate) *det = -*det;
    }
  }
  return r;
}

}  // namespace

UniPoly PolyMatrix::det() const {
  if (!is_square()) throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  if (rows_ == 0) return UniPoly::constant(field_.one());
  UniPoly d(field_);
  bareiss(data_, rows_, cols_, &d);
  return d;
}

std::size_t PolyMatrix::rank() const { return bareiss(data_, rows_, cols_, nullptr); }

int PolyMatrix::max_degree() const {
  int d = -1;
  for (const auto& e : data_) d = std::max(d, e.degree());
  return d;
}

std::vector<std::vector<std::string>> PolyMatrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i].push_back((*this)(i, j).to_string());
  }
  return out;
}

PolyMatrix block_diag(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix m(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

PolyVector to_poly_vector(const Vector& v) {
  PolyVector r;
  r.reserve(v.size());
  for (const auto& s : v) r.push_back(UniPoly::constant(s));
  return r;
}

Vector eval(const PolyVector& v, const Scalar& y0) {
  Vector r;
  r.reserve(v.size());
  for (const auto& p : v) r.push_back(p(y0));
  return r;
}

bool is_zero(const PolyVector& v) {
  return std::all_of(v.begin(), v.end(), [](const UniPoly& p) { return p.is_zero(); });
}

}  // namespace resmith
