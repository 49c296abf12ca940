#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "resmith/field.hpp"
#include "resmith/poly.hpp"

namespace resmith {

/// sum c_ij D_ij; no stored zeros.
class DualFunctional {
 public:
  using Index = std::pair<int, int>;

  explicit DualFunctional(Field field = Field::rationals()) : field_(field) {}
  static DualFunctional monomial(const Field& field, int i, int j);

  const Field& field() const noexcept { return field_; }
  const std::map<Index, Scalar>& coeffs() const noexcept { return c_; }
  Scalar coeff(int i, int j) const;
  bool is_zero() const noexcept { return c_.empty(); }
  void add(int i, int j, const Scalar& c);

  DualFunctional& operator+=(const DualFunctional& o);
  DualFunctional& operator*=(const Scalar& s);
  friend DualFunctional operator+(DualFunctional a, const DualFunctional& b) { return a += b; }
  friend DualFunctional operator*(const Scalar& s, DualFunctional a) { return a *= s; }
  friend bool operator==(const DualFunctional& a, const DualFunctional& b);

  /// (phi p) at (x0, y0) = sum c_ij (D_ij p)(x0, y0).
  Scalar apply(const BiPoly& p, const Scalar& x0, const Scalar& y0) const;

  /// "D[0,3]-1/3*D[1,2]", terms in decreasing lex order with x < y.
  std::string to_string() const;

 private:
  Field field_;
  std::map<Index, Scalar> c_;
};

/// A_x D_ij = D_{i-1,j} (0 if i = 0); A_y likewise on j.
DualFunctional antiderivative(const DualFunctional& phi, Var var);

enum class LexOrder {
  XLessY,  // D_ij < D_kl iff j < l, or j == l and i < k
  YLessX,
};

/// Whether D_a < D_b in the given order.
bool lex_less(LexOrder order, const DualFunctional::Index& a, const DualFunctional::Index& b);
DualFunctional::Index leading_monomial(const DualFunctional& phi, LexOrder order);

struct DualSpace {
  Scalar x0;
  Scalar y0;
  std::vector<DualFunctional> basis;
  /// Degree at which the truncated spaces stabilized.
  int stabilized_at = 0;

  std::size_t dim() const { return basis.size(); }
};

struct DualOptions {
  /// Largest total degree explored before giving up.
  int max_degree = 50;
};

/// Local dual space of <f, g> at (x0, y0): V_t = functionals on D_ij with
/// i + j <= t that kill x^a y^b f and x^a y^b g (a + b <= t) at the point,
/// for t = 0, 1, ... until dim V_{t+1} = dim V_t. NotOnVariety if the point
/// is not a common zero; NotZeroDimensional once the cap is hit or the
/// dimension exceeds the Bezout bound; InternalInconsistency if the result
/// is not closed under A_x and A_y.
DualSpace dual_space(const BiPoly& f, const BiPoly& g, const Scalar& x0, const Scalar& y0,
                     const DualOptions& options = {});

/// Whether span(basis) is closed under both antiderivatives.
bool is_closed(const std::vector<DualFunctional>& basis);

struct GaussBasis {
  LexOrder order = LexOrder::XLessY;
  /// Increasing leading monomials; each leading coefficient is 1 and no
  /// element mentions another element's leading monomial.
  std::vector<DualFunctional> elements;
  std::vector<DualFunctional::Index> leading_monomials;
};

/// Gauss-Jordan elimination of V's basis over the D_ij coordinates sorted
/// by the order.
GaussBasis gauss_basis(const DualSpace& v, LexOrder order);
GaussBasis gauss_basis(const std::vector<DualFunctional>& basis, LexOrder order);

struct MoellerIndices {
  int beta = 0;
  /// Non-increasing, length beta.
  std::vector<int> alpha;

  int total() const;
  friend bool operator==(const MoellerIndices&, const MoellerIndices&) = default;
};

/// Indices read off the leading monomials: with respect to y for an x < y
/// basis, with respect to x for a y < x basis. MalformedBasis if the
/// leading monomials do not form a staircase.
MoellerIndices moeller_indices(const GaussBasis& gb);

/// phi_i: the element whose leading monomial tops column i of the
/// staircase. ShapeViolation if its tail reaches that height.
std::vector<DualFunctional> leading_vectors(const GaussBasis& gb, const MoellerIndices& mi);

/// Multiplicity of x0 in gcd(f(x, y0), g(x, y0)). NotOnVariety off the
/// variety.
int beta_via_gcd(const BiPoly& f, const BiPoly& g, const Scalar& x0, const Scalar& y0);

}  // namespace resmith
