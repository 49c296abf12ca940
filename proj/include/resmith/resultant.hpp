#pragma once

#include <vector>

#include "resmith/linalg.hpp"
#include "resmith/poly.hpp"
#include "resmith/poly_matrix.hpp"
#include "resmith/roots.hpp"

namespace resmith {

/// f, g viewed in F[y][x] together with the grades (m, n) of the Sylvester
/// matrix; the grades may exceed the x-degrees.
struct SylvesterSpec {
  BiPoly f;
  BiPoly g;
  int m = 0;
  int n = 0;

  /// Grades (deg_x f, deg_x g).
  static SylvesterSpec natural(const BiPoly& f, const BiPoly& g);
  /// GradeTooSmall unless m >= deg_x f, n >= deg_x g and m + n >= 1.
  void validate() const;
};

/// n rows of shifted f-coefficients over m rows of shifted g-coefficients,
/// so that S Lambda_{m+n}(t) = [f(t) Lambda_n(t); g(t) Lambda_m(t)] with
/// Lambda_k(t) = (t^{k-1}, ..., t, 1).
PolyMatrix sylvester_matrix(const SylvesterSpec& spec);

/// k x k matrix with Lambda_k(z)^T B Lambda_k(x) = (f(x)g(z) - f(z)g(x))/(x - z),
/// k = max(deg_x f, deg_x g). DegreeZero if k == 0.
PolyMatrix bezout_matrix(const BiPoly& f, const BiPoly& g);

/// S^T [[0, F], [-F, 0]] S == [[0, B], [-B, 0]] with the (k, k)-Sylvester
/// matrix S and the k x k flip matrix F.
bool flip_identity_check(const BiPoly& f, const BiPoly& g);

/// det of the (deg_x f, deg_x g)-Sylvester matrix.
UniPoly resultant(const BiPoly& f, const BiPoly& g);

/// c with det B = +-c Res(f, g): the leading x-coefficient of the
/// higher-degree polynomial raised to the degree gap, or 1.
UniPoly extraneous_factor(const BiPoly& f, const BiPoly& g);

/// Lambda_k^{(i)}(x0): the i-th Hasse derivative of Lambda_k at x0.
Vector confluent_vandermonde(const Scalar& x0, int i, std::size_t k);

struct KernelData {
  std::size_t rank = 0;
  std::vector<Vector> kernel;
  std::vector<Vector> cokernel;
  /// gcd of the specializations, as a polynomial in x.
  UniPoly h;
  /// Number of unit vectors e_1..e_s in the kernel.
  int s = 0;
  /// Base-field roots of h.
  std::vector<Root> roots;
  /// Whether the base-field roots account for all of deg h.
  bool complete = true;
};

/// Explicit kernel and cokernel of S(y0) built from h = gcd(f(x,y0), g(x,y0))
/// and s = min(m - deg f(x,y0), n - deg g(x,y0)). Kernel vectors are
/// emitted only at base-field roots of h. SpecializationVanishes if both
/// specializations vanish identically.
KernelData sylvester_kernel_basis(const SylvesterSpec& spec, const Scalar& y0);

/// Kernel of B(y0). When both specializations drop below degree k the
/// leading k - max(deg f(x,y0), deg g(x,y0)) unit vectors join the
/// Vandermonde vectors. B is symmetric, so the cokernel equals the kernel.
KernelData bezout_kernel_basis(const BiPoly& f, const BiPoly& g, const Scalar& y0);

/// gcd over F[y] of the x-coefficients of p.
UniPoly x_content(const BiPoly& p);

/// Whether gcd(f, g) is a constant in F[x, y].
bool coprime(const BiPoly& f, const BiPoly& g);

}  // namespace resmith
