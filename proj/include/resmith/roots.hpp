#pragma once

#include <vector>

#include "resmith/field.hpp"
#include "resmith/poly.hpp"

namespace resmith {

struct Root {
  Scalar value;
  int multiplicity = 0;

  friend bool operator==(const Root&, const Root&) = default;
};

/// All roots of p lying in its own field, with exact multiplicities, sorted
/// by `compare`. ZeroPolynomial on p == 0.
///
/// Over Q the square-free part is reduced modulo a small good prime, its
/// roots there are Hensel-lifted past the Cauchy bound and reconstructed as
/// c / lead; every candidate is confirmed by exact evaluation. Over F_p the
/// field is searched exhaustively when p is small, otherwise the linear part
/// gcd(p, y^p - y) is split by random equal-degree splitting.
std::vector<Root> rational_roots(const UniPoly& p);

}  // namespace resmith
