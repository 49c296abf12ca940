#pragma once

#include "resmith/linalg.hpp"
#include "resmith/resultant.hpp"
#include "resmith/smith.hpp"
#include "support.hpp"

namespace testing_support {

// Row i of S times Lambda(t), as a polynomial with t in the x slot.
inline bool sylvester_defining_identity(const SylvesterSpec& spec) {
  PolyMatrix s = sylvester_matrix(spec);
  const int size = spec.m + spec.n;
  const Field& f = spec.f.field();
  for (int i = 0; i < size; ++i) {
    BiPoly row(f);
    for (int j = 0; j < size; ++j) {
      row += BiPoly::from_uni(s(static_cast<std::size_t>(i), static_cast<std::size_t>(j))) *
             BiPoly::monomial(f.one(), size - 1 - j, 0);
    }
    BiPoly expected = i < spec.n ? spec.f * BiPoly::monomial(f.one(), spec.n - 1 - i, 0)
                                 : spec.g * BiPoly::monomial(f.one(), spec.m - 1 - (i - spec.n), 0);
    if (!(row == expected)) return false;
  }
  return true;
}

// Definition-based oracle: coefficient of z^{k-1-i} x^{k-1-j} of the
// Bezoutian, using bivariate exact division with z in the y slot of a
// fixed specialization y = y0.
inline Matrix bezout_by_division(const BiPoly& f, const BiPoly& g, const Scalar& y0) {
  UniPoly fp = eval_y(f, y0), gp = eval_y(g, y0);
  const Field& fld = f.field();
  auto as_x = [&](const UniPoly& p) {
    BiPoly r(fld);
    for (int e = 0; e <= p.degree(); ++e) r.add_term(e, 0, p.coeff(e));
    return r;
  };
  auto as_z = [&](const UniPoly& p) { return swap_xy(as_x(p)); };
  BiPoly num = as_x(fp) * as_z(gp) - as_z(fp) * as_x(gp);
  BiPoly q = exact_div(num, P("x-y", fld));
  int k = std::max(f.deg_x(), g.deg_x());
  Matrix b(fld, static_cast<std::size_t>(k), static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) b(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = q.coeff(k - 1 - j, k - 1 - i);
  }
  return b;
}

// U M V = D, unimodular U and V, monic divisibility chain, and agreement
// with the determinantal divisors for square input.
inline bool smith_contract_holds(const PolyMatrix& m) {
  SmithForm sf = smith_form(m, true);
  const auto& d = sf.invariant_factors;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i].is_zero()) {
      for (std::size_t j = i; j < d.size(); ++j) {
        if (!d[j].is_zero()) return false;
      }
      break;
    }
    if (!d[i].lead().is_one()) return false;
    if (i + 1 < d.size() && !d[i + 1].is_zero() && !d[i + 1].divide_exact(d[i])) return false;
  }
  if (!(*sf.U * m * *sf.V == sf.diagonal(m.rows(), m.cols()))) return false;
  if (sf.U->det().degree() != 0 || sf.V->det().degree() != 0) return false;
  if (m.is_square() && invariant_factors_from_divisors(determinantal_divisors(m), m.rows()) != d) return false;
  return true;
}

}  // namespace testing_support
