#include "resmith/infinity.hpp"

#include <algorithm>
#include <random>

#include "resmith/error.hpp"
#include "resmith/roots.hpp"

namespace resmith {

namespace {

constexpr int kMaxAttempts = 32;

void require_zero_dimensional(const BiPoly& f, const BiPoly& g, std::pair<int, int> grades) {
  SylvesterSpec{f, g, grades.first, grades.second}.validate();
  if (grades.first > f.deg_x() && grades.second > g.deg_x()) {
    throw Error(ErrorCode::NotZeroDimensional, "both grades exceed the x-degrees; every y is an eigenvalue");
  }
  if (!coprime(f, g)) throw Error(ErrorCode::NotZeroDimensional, "f and g share a nonconstant factor");
}

// Descending coefficients of (a z + b)^i (c z + d)^j, length i + j + 1.
Vector binomial_row(const MoebiusMap& map, int i, int j) {
  UniPoly num(map.a().field(), {map.b(), map.a()}, Var::X);
  UniPoly den(map.a().field(), {map.d(), map.c()}, Var::X);
  UniPoly p = num.pow(static_cast<unsigned>(i)) * den.pow(static_cast<unsigned>(j));
  Vector row(static_cast<std::size_t>(i + j + 1), map.a().field().zero());
  for (int e = 0; e <= p.degree(); ++e) row[row.size() - 1 - static_cast<std::size_t>(e)] = p.coeff(e);
  return row;
}

PolyMatrix constant(const Matrix& m) { return PolyMatrix::from_constant(m); }

}  // namespace

UniPoly grade_lead(const BiPoly& p, int grade) {
  if (grade > p.deg_x()) return UniPoly(p.field());
  return p.x_coeff(grade);
}

InfinityReport infinity_at(const BiPoly& f, const BiPoly& g, std::pair<int, int> grades, const Scalar& y0,
                           const DualOptions& options) {
  InfinityReport r;
  r.y0 = y0;
  if (!grade_lead(f, grades.first)(y0).is_zero() || !grade_lead(g, grades.second)(y0).is_zero()) return r;
  BiPoly rf = reverse_x(f, grades.first);
  BiPoly rg = reverse_x(g, grades.second);
  const Scalar zero = y0.field().zero();
  DualSpace v = dual_space(rf, rg, zero, y0, options);
  r.is_infinite_intersection = true;
  r.multiplicity = static_cast<int>(v.dim());
  r.indices = moeller_indices(gauss_basis(v, LexOrder::XLessY));
  return r;
}

std::vector<InfinityReport> infinite_intersections(const BiPoly& f, const BiPoly& g, std::pair<int, int> grades,
                                                   const DualOptions& options) {
  require_zero_dimensional(f, g, grades);
  UniPoly common = gcd(grade_lead(f, grades.first), grade_lead(g, grades.second));
  std::vector<InfinityReport> out;
  if (common.degree() <= 0) return out;
  for (const auto& root : rational_roots(common)) out.push_back(infinity_at(f, g, grades, root.value, options));
  return out;
}

MoebiusChoice choose_moebius(const BiPoly& f, const BiPoly& g, std::pair<int, int> grades,
                             const std::vector<Scalar>& forbidden_x, std::uint64_t seed) {
  require_zero_dimensional(f, g, grades);
  const Field& field = f.field();
  std::mt19937_64 rng(seed);
  const std::uint64_t p = field.characteristic();
  if (p != 0 && forbidden_x.size() >= p) {
    throw Error(ErrorCode::ExhaustedField, "every element of " + field.name() + " is a forbidden x-coordinate");
  }
  auto draw = [&](int attempt, bool nonzero) {
    if (p != 0) {
      std::uint64_t lo = nonzero ? 1 : 0;
      return field.from_integer(mpz_class(static_cast<unsigned long>(lo + rng() % (p - lo))));
    }
    // Small integers first; the range widens with every rejection.
    long long span = 4 + 4LL * attempt;
    long long v = static_cast<long long>(rng() % static_cast<std::uint64_t>(2 * span + 1)) - span;
    if (nonzero && v == 0) v = span + 1;
    return field.from_int(v);
  };
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Scalar a = draw(attempt, false);
    Scalar d = draw(attempt, false);
    if (std::find(forbidden_x.begin(), forbidden_x.end(), a) != forbidden_x.end()) continue;
    MoebiusMap map(a, a * d - field.one(), field.one(), d);
    BiPoly fh = moebius_substitute(f, map, grades.first);
    BiPoly gh = moebius_substitute(g, map, grades.second);
    if (grade_lead(fh, grades.first).is_zero() || grade_lead(gh, grades.second).is_zero()) continue;
    if (gcd(grade_lead(fh, grades.first), grade_lead(gh, grades.second)).degree() > 0) continue;
    if (!coprime(fh, gh)) continue;
    return {map, fh, gh, attempt + 1};
  }
  if (p != 0) {
    throw Error(ErrorCode::ExhaustedField,
                "no admissible Moebius map over " + field.name() + " in " + std::to_string(kMaxAttempts) + " draws");
  }
  throw Error(ErrorCode::InternalInconsistency,
              "no admissible Moebius map in " + std::to_string(kMaxAttempts) + " draws");
}

Matrix moebius_matrix(const MoebiusMap& map, std::size_t k) {
  Matrix m(map.a().field(), k, k);
  for (std::size_t r = 0; r < k; ++r) {
    Vector row = binomial_row(map, static_cast<int>(k - 1 - r), static_cast<int>(r));
    for (std::size_t j = 0; j < k; ++j) m(r, j) = row[j];
  }
  return m;
}

bool strict_equivalence_check(const PolyMatrix& s, const PolyMatrix& s_hat, const MoebiusMap& map,
                              std::pair<int, int> sizes) {
  const auto [m, n] = sizes;
  const std::size_t total = static_cast<std::size_t>(m + n);
  if (s.rows() != total || s.cols() != total || s_hat.rows() != total || s_hat.cols() != total) {
    throw Error(ErrorCode::DimensionMismatch, "Sylvester matrices must be " + std::to_string(total) + " x " +
                                                  std::to_string(total));
  }
  PolyMatrix left = block_diag(constant(moebius_matrix(map, static_cast<std::size_t>(n))),
                               constant(moebius_matrix(map, static_cast<std::size_t>(m))));
  Matrix left_const = left.eval(map.a().field().zero());
  PolyMatrix inv = constant(left_const.inverse());
  return inv * s * constant(moebius_matrix(map, total)) == s_hat;
}

bool bezout_congruence_check(const PolyMatrix& b, const PolyMatrix& b_hat, const MoebiusMap& map) {
  if (!b.is_square() || b.rows() != b_hat.rows() || b.cols() != b_hat.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "Bezout matrices of different sizes");
  }
  PolyMatrix mk = constant(moebius_matrix(map, b.rows()));
  return mk.transpose() * b * mk == b_hat;
}

PolyVector pull_back(const PolyVector& v_hat, const MoebiusMap& map) {
  return constant(moebius_matrix(map, v_hat.size())) * v_hat;
}

}  // namespace resmith
