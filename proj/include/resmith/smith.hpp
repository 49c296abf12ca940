#pragma once

#include <optional>
#include <vector>

#include "resmith/poly_matrix.hpp"

namespace resmith {

struct SmithForm {
  /// Diagonal of D, length min(rows, cols); monic, each dividing the next,
  /// zero polynomials trailing for rank-deficient input.
  std::vector<UniPoly> invariant_factors;
  /// Unimodular transforms with U M V = D, when requested.
  std::optional<PolyMatrix> U;
  std::optional<PolyMatrix> V;

  PolyMatrix diagonal(std::size_t rows, std::size_t cols) const;
};

/// Elimination with minimal-degree pivots (ties: lowest row, then column),
/// restarting whenever a remainder survives, then adding a row to the pivot
/// row until the pivot divides the trailing block.
SmithForm smith_form(const PolyMatrix& m, bool want_transforms = false);

/// d_k = monic gcd of all k x k minors for k = 1..rank.
std::vector<UniPoly> determinantal_divisors(const PolyMatrix& m);
/// d_k / d_{k-1}, padded with zeros up to min(rows, cols).
std::vector<UniPoly> invariant_factors_from_divisors(const std::vector<UniPoly>& d, std::size_t size);

struct PartialMultiplicities {
  Scalar eigenvalue;
  /// Non-increasing, all positive.
  std::vector<int> kappas;

  int geometric() const { return static_cast<int>(kappas.size()); }
  int algebraic() const;
};

PartialMultiplicities partial_multiplicities(const SmithForm& sf, const Scalar& y0);

/// Partial multiplicities at y0 from a Smith form over truncated power
/// series in (y - y0). Square matrices with det != 0 only.
std::vector<int> local_partial_multiplicities(const PolyMatrix& m, const Scalar& y0);

}  // namespace resmith
