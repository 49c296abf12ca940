#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "resmith/dual.hpp"
#include "resmith/linalg.hpp"
#include "resmith/poly.hpp"
#include "resmith/poly_matrix.hpp"
#include "resmith/resultant.hpp"

namespace resmith {

/// Data at (infinity, y0) for the pair (f, g) read at grades (m, n). The
/// indices belong to the pair and grades, not to the ideal.
struct InfinityReport {
  Scalar y0;
  bool is_infinite_intersection = false;
  /// dim of the dual space of <rev f, rev g> at (0, y0).
  int multiplicity = 0;
  MoellerIndices indices;
};

/// Grade-m coefficient of x in p; zero when m exceeds deg_x p.
UniPoly grade_lead(const BiPoly& p, int grade);

/// Report at a single y0. Not an infinite intersection unless both grade
/// leading coefficients vanish there.
InfinityReport infinity_at(const BiPoly& f, const BiPoly& g, std::pair<int, int> grades, const Scalar& y0,
                           const DualOptions& options = {});

/// One report per base-field common root of the grade leading coefficients,
/// sorted by y0. NotZeroDimensional if f, g share a factor or if both
/// grades exceed the degrees.
std::vector<InfinityReport> infinite_intersections(const BiPoly& f, const BiPoly& g, std::pair<int, int> grades,
                                                   const DualOptions& options = {});

/// A transformed pair together with the map that produced it.
struct MoebiusChoice {
  MoebiusMap map;
  BiPoly f_hat;
  BiPoly g_hat;
  int attempts = 0;
};

/// x = (a z + b) / (z + d) with a outside forbidden_x and b = ad - 1, drawn
/// from a generator seeded with `seed`. A draw is kept only if the
/// transformed leading coefficients c^m f(a/c, y), c^n g(a/c, y) are coprime
/// and the transformed pair is coprime. ExhaustedField over F_p when no
/// candidate survives 32 draws or the field has no admissible a.
MoebiusChoice choose_moebius(const BiPoly& f, const BiPoly& g, std::pair<int, int> grades,
                             const std::vector<Scalar>& forbidden_x, std::uint64_t seed);

/// Row r holds the coefficients of (az + b)^{k-1-r} (cz + d)^r, highest
/// power of z first, so that M_k Lambda_k(z) = (cz + d)^{k-1} Lambda_k(phi(z)).
Matrix moebius_matrix(const MoebiusMap& map, std::size_t k);

/// Whether (M_n + M_m)^{-1} S M_{m+n} == S_hat, with + the direct sum.
/// DimensionMismatch unless both are (m+n) x (m+n).
bool strict_equivalence_check(const PolyMatrix& s, const PolyMatrix& s_hat, const MoebiusMap& map,
                              std::pair<int, int> sizes);

/// Whether M_k^T B M_k == B_hat.
bool bezout_congruence_check(const PolyMatrix& b, const PolyMatrix& b_hat, const MoebiusMap& map);

/// Pulls a vector for the transformed matrix back to one for the original:
/// v = M_dim v_hat. Orders as root vectors are preserved.
PolyVector pull_back(const PolyVector& v_hat, const MoebiusMap& map);

}  // namespace resmith
