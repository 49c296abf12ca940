#include "resmith/rootvectors.hpp"

#include <algorithm>

#include "resmith/error.hpp"
#include "resmith/linalg.hpp"

namespace resmith {

PolyVector lift_functional(const DualFunctional& phi, const Scalar& x0, const Scalar& y0, int alpha,
                           std::size_t dim) {
  const Field& field = x0.field();
  PolyVector out(dim, UniPoly(field));
  for (const auto& [k, c] : phi.coeffs()) {
    const auto [i, j] = k;
    if (j > alpha) continue;
    Vector lam = confluent_vandermonde(x0, i, dim);
    UniPoly shift = UniPoly::linear_power(y0, alpha - j) * c;
    for (std::size_t r = 0; r < dim; ++r) {
      if (!lam[r].is_zero()) out[r] += shift * lam[r];
    }
  }
  return out;
}

RootVector verify_root_vector(const PolyMatrix& m, const PolyVector& v, const Scalar& y0, int claimed_order) {
  if (is_zero_vector(eval(v, y0))) {
    throw Error(ErrorCode::ZeroAtPoint, "candidate vanishes at y = " + y0.to_string());
  }
  PolyVector w = m * v;
  if (is_zero(w)) throw Error(ErrorCode::InternalInconsistency, "M v vanishes identically");
  int order = -1;
  for (const auto& e : w) {
    if (e.is_zero()) continue;
    int mu = root_multiplicity(e, y0);
    order = order < 0 ? mu : std::min(order, mu);
  }
  if (order == 0) throw Error(ErrorCode::NotEigenvalue, "M v does not vanish at y = " + y0.to_string());
  RootVector rv;
  rv.vec = v;
  rv.eigenvalue = y0;
  rv.claimed_order = claimed_order;
  rv.verified_order = order;
  UniPoly div = UniPoly::linear_power(y0, order);
  for (const auto& e : w) rv.quotient.push_back(e.is_zero() ? e : *e.divide_exact(div));
  return rv;
}

PointData point_data(const BiPoly& f, const BiPoly& g, const Scalar& x0, const Scalar& y0,
                     const DualOptions& options) {
  DualSpace v = dual_space(f, g, x0, y0, options);
  GaussBasis gb = gauss_basis(v, LexOrder::XLessY);
  PointData pd;
  pd.x0 = x0;
  pd.y0 = y0;
  pd.dual_dim = v.dim();
  pd.indices = moeller_indices(gb);
  pd.leading = leading_vectors(gb, pd.indices);
  return pd;
}

RootSet root_set(const PolyMatrix& m, const Scalar& y0, const std::vector<PointData>& points,
                 std::size_t reserved) {
  RootSet rs;
  const std::size_t dim = m.cols();
  std::vector<Vector> at_y0;
  for (const auto& p : points) {
    for (int i = 0; i < p.indices.beta; ++i) {
      int alpha = p.indices.alpha[static_cast<std::size_t>(i)];
      PolyVector v = lift_functional(p.leading[static_cast<std::size_t>(i)], p.x0, y0, alpha - 1, dim);
      RootVector rv = verify_root_vector(m, v, y0, alpha);
      if (rv.verified_order < alpha) rs.orders_reach_indices = false;
      rs.order_sum += rv.verified_order;
      at_y0.push_back(eval(rv.vec, y0));
      rs.vectors.push_back(std::move(rv));
    }
  }
  rs.kernel_dim = dim - m.eval(y0).rank();
  if (rank_of(m.field(), at_y0) != at_y0.size() || at_y0.size() + reserved != rs.kernel_dim) {
    throw Error(ErrorCode::IncompleteVariety, std::to_string(at_y0.size()) + " root vectors at y = " +
                                                  y0.to_string() + " against a kernel of dimension " +
                                                  std::to_string(rs.kernel_dim));
  }
  rs.det_valuation = root_multiplicity(m.det(), y0);
  rs.maximal = rs.order_sum == rs.det_valuation;
  return rs;
}

RootSet sylvester_root_set(const SylvesterSpec& spec, const Scalar& y0, const std::vector<PointData>& points,
                           std::size_t reserved) {
  return root_set(sylvester_matrix(spec), y0, points, reserved);
}

RootSet bezout_root_set(const BiPoly& f, const BiPoly& g, const Scalar& y0, const std::vector<PointData>& points,
                        std::size_t reserved) {
  return root_set(bezout_matrix(f, g), y0, points, reserved);
}

}  // namespace resmith
