#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "resmith/field.hpp"

namespace resmith {

/// Variable tag for univariate polynomials. Only affects printing.
enum class Var : char { X = 'x', Y = 'y' };

/// Dense univariate polynomial; coeffs()[k] is the coefficient of var^k.
/// The zero polynomial has no coefficients and degree -1.
class UniPoly {
 public:
  explicit UniPoly(Field field = Field::rationals(), Var var = Var::Y) : field_(field), var_(var) {}
  UniPoly(Field field, std::vector<Scalar> coeffs, Var var = Var::Y);

  static UniPoly constant(const Scalar& c, Var var = Var::Y);
  static UniPoly monomial(const Scalar& c, int k, Var var = Var::Y);
  /// var - root
  static UniPoly linear(const Scalar& root, Var var = Var::Y);
  /// (var - root)^k
  static UniPoly linear_power(const Scalar& root, int k, Var var = Var::Y);

  const Field& field() const noexcept { return field_; }
  Var var() const noexcept { return var_; }
  UniPoly with_var(Var v) const;

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }

  /// Leading coefficient; zero for the zero polynomial.
  Scalar lead() const;
  Scalar coeff(int k) const;
  std::span<const Scalar> coeffs() const noexcept { return c_; }

  Scalar operator()(const Scalar& at) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Scalar& s);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Scalar& s) { return a *= s; }
  friend UniPoly operator*(const Scalar& s, UniPoly a) { return a *= s; }
  UniPoly operator-() const;
  friend bool operator==(const UniPoly& a, const UniPoly& b);

  UniPoly pow(unsigned e) const;
  /// Zero stays zero.
  UniPoly monic() const;
  /// Quotient and remainder; DivisionByZero on a zero divisor.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
  /// Quotient iff `d` divides *this exactly.
  std::optional<UniPoly> divide_exact(const UniPoly& d) const;
  /// k-th Hasse derivative.
  UniPoly hasse(int k) const;
  /// p(var + shift)
  UniPoly shifted(const Scalar& shift) const;

  std::string to_string() const;

 private:
  void trim();

  Field field_;
  Var var_;
  std::vector<Scalar> c_;
};

/// Monic gcd via the Euclidean algorithm; BothZero if both arguments vanish.
UniPoly gcd(const UniPoly& p, const UniPoly& q);

/// Multiplicity of y0 as a root of p, by repeated exact division.
int root_multiplicity(const UniPoly& p, const Scalar& y0);
/// Same quantity from the Hasse-derivative criterion: the first k with
/// (D^k p)(y0) != 0.
int root_multiplicity_hasse(const UniPoly& p, const Scalar& y0);

/// Sparse bivariate polynomial. Keys are (x exponent, y exponent); no stored
/// zeros.
class BiPoly {
 public:
  using Exponent = std::pair<int, int>;
  using TermMap = std::map<Exponent, Scalar>;

  explicit BiPoly(Field field = Field::rationals()) : field_(field) {}

  static BiPoly constant(const Scalar& c);
  static BiPoly monomial(const Scalar& c, int i, int j);
  static BiPoly x(const Field& field) { return monomial(field.one(), 1, 0); }
  static BiPoly y(const Field& field) { return monomial(field.one(), 0, 1); }
  /// Inverse of x_coeffs(): sum_i coeffs[i](y) x^i.
  static BiPoly from_x_coeffs(const Field& field, std::span<const UniPoly> coeffs);
  /// Embeds a univariate polynomial; its variable tag decides which slot.
  static BiPoly from_uni(const UniPoly& p);

  const Field& field() const noexcept { return field_; }
  const TermMap& terms() const noexcept { return terms_; }
  Scalar coeff(int i, int j) const;

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  int deg_x() const;
  int deg_y() const;
  int total_degree() const;

  /// Coefficient of x^i as a polynomial in y.
  UniPoly x_coeff(int i) const;
  /// The F[y][x] view: entry i is the coefficient of x^i, length deg_x + 1.
  std::vector<UniPoly> x_coeffs() const;

  void add_term(int i, int j, const Scalar& c);

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const Scalar& s);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const Scalar& s) { return a *= s; }
  friend BiPoly operator*(const Scalar& s, BiPoly a) { return a *= s; }
  BiPoly operator-() const;
  friend bool operator==(const BiPoly& a, const BiPoly& b);

  BiPoly pow(unsigned e) const;

  /// Canonical form: terms by (y-degree, x-degree) descending, explicit '*'
  /// and '^'. Re-parses to the same polynomial.
  std::string to_string() const;

 private:
  Field field_;
  TermMap terms_;
};

/// Quotient of p by q; NotDivisible if q does not divide p.
BiPoly exact_div(const BiPoly& p, const BiPoly& q);
std::optional<BiPoly> try_exact_div(const BiPoly& p, const BiPoly& q);

/// D_{ij} applied termwise with binomials computed in the field.
BiPoly hasse_derivative(const BiPoly& p, int i, int j);

Scalar eval(const BiPoly& p, const Scalar& x0, const Scalar& y0);
/// p(x0, y) as a polynomial in y.
UniPoly eval_x(const BiPoly& p, const Scalar& x0);
/// p(x, y0) as a polynomial in x.
UniPoly eval_y(const BiPoly& p, const Scalar& y0);

/// sum_i p_{grade-i}(y) x^i. GradeTooSmall if grade < deg_x p.
BiPoly reverse_x(const BiPoly& p, int grade);
/// Same with grade = deg_x p.
BiPoly reverse_x(const BiPoly& p);
BiPoly swap_xy(const BiPoly& p);
/// p(x + x0, y + y0)
BiPoly translate(const BiPoly& p, const Scalar& x0, const Scalar& y0);

/// x = (a z + b) / (c z + d) with ad - bc = 1 and c != 0.
class MoebiusMap {
 public:
  /// Throws InvalidMoebius if the invariants fail.
  MoebiusMap(Scalar a, Scalar b, Scalar c, Scalar d);

  const Scalar& a() const noexcept { return a_; }
  const Scalar& b() const noexcept { return b_; }
  const Scalar& c() const noexcept { return c_; }
  const Scalar& d() const noexcept { return d_; }

  /// z0 with phi(z0) = x0; requires a - c x0 != 0.
  Scalar preimage(const Scalar& x0) const;
  /// The z-coordinate that x = infinity is sent to: -d/c.
  Scalar pole() const { return -d_ / c_; }

 private:
  Scalar a_, b_, c_, d_;
};

/// (cz + d)^grade p((az + b)/(cz + d), y), returned with z in the x slot.
/// grade defaults to deg_x p.
BiPoly moebius_substitute(const BiPoly& p, const MoebiusMap& m, std::optional<int> grade = std::nullopt);

}  // namespace resmith
