#pragma once

#include <vector>

#include "resmith/dual.hpp"
#include "resmith/poly_matrix.hpp"
#include "resmith/resultant.hpp"

namespace resmith {

struct RootVector {
  PolyVector vec;
  Scalar eigenvalue;
  int claimed_order = 0;
  int verified_order = 0;
  /// M vec / (y - y0)^verified_order; nonzero at y0.
  PolyVector quotient;
};

/// sum c_ij (y - y0)^{alpha - j} Lambda^{(i)}_dim(x0) over the terms of phi
/// with j <= alpha.
PolyVector lift_functional(const DualFunctional& phi, const Scalar& x0, const Scalar& y0, int alpha, std::size_t dim);

/// Exact order of v as a root vector of M at y0. ZeroAtPoint if v(y0) = 0,
/// NotEigenvalue if (M v)(y0) != 0.
RootVector verify_root_vector(const PolyMatrix& m, const PolyVector& v, const Scalar& y0, int claimed_order = 0);

/// Dual data at one finite point: Moeller indices with respect to y and the
/// leading vectors of the x < y Gauss basis.
struct PointData {
  Scalar x0;
  Scalar y0;
  std::size_t dual_dim = 0;
  MoellerIndices indices;
  std::vector<DualFunctional> leading;
};

PointData point_data(const BiPoly& f, const BiPoly& g, const Scalar& x0, const Scalar& y0,
                     const DualOptions& options = {});

struct RootSet {
  std::vector<RootVector> vectors;
  /// dim ker M(y0)
  std::size_t kernel_dim = 0;
  /// nu_{y0}(det M)
  int det_valuation = 0;
  int order_sum = 0;
  /// Sum of orders equals the valuation of det M.
  bool maximal = false;
  /// Every lifted order reached its index.
  bool orders_reach_indices = true;
};

/// One root vector per (x0, i < beta(x0)), lifted from the leading vectors
/// into dimension m + n and verified against S(y). IncompleteVariety when
/// the values at y0 are dependent or, together with `reserved` kernel
/// directions left to infinity, fewer than dim ker S(y0).
RootSet sylvester_root_set(const SylvesterSpec& spec, const Scalar& y0, const std::vector<PointData>& points,
                           std::size_t reserved = 0);

/// Same against B(y) in dimension k = max(deg_x f, deg_x g).
RootSet bezout_root_set(const BiPoly& f, const BiPoly& g, const Scalar& y0, const std::vector<PointData>& points,
                        std::size_t reserved = 0);

/// Shared machinery: lift into M's dimension and certify.
RootSet root_set(const PolyMatrix& m, const Scalar& y0, const std::vector<PointData>& points,
                 std::size_t reserved = 0);

}  // namespace resmith
