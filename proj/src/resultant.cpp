#include "resmith/resultant.hpp"

#include <algorithm>
#include <map>

#include "resmith/error.hpp"

namespace resmith {

SylvesterSpec SylvesterSpec::natural(const BiPoly& f, const BiPoly& g) {
  return SylvesterSpec{f, g, std::max(f.deg_x(), 0), std::max(g.deg_x(), 0)};
}

void SylvesterSpec::validate() const {
  if (m < f.deg_x() || n < g.deg_x() || m < 0 || n < 0) {
    throw Error(ErrorCode::GradeTooSmall, "grades (" + std::to_string(m) + "," + std::to_string(n) +
                                              ") below the x-degrees (" + std::to_string(f.deg_x()) + "," +
                                              std::to_string(g.deg_x()) + ")");
  }
  if (m + n < 1) throw Error(ErrorCode::DegreeZero, "Sylvester matrix of two constants");
  if (!(f.field() == g.field())) throw Error(ErrorCode::MixedFields, "Sylvester spec");
}

PolyMatrix sylvester_matrix(const SylvesterSpec& spec) {
  spec.validate();
  const Field& field = spec.f.field();
  const int m = spec.m, n = spec.n;
  const std::size_t size = static_cast<std::size_t>(m + n);
  PolyMatrix s(field, size, size);
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k <= m; ++k) s(static_cast<std::size_t>(r), static_cast<std::size_t>(r + k)) = spec.f.x_coeff(m - k);
  }
  for (int r = 0; r < m; ++r) {
    for (int k = 0; k <= n; ++k) {
      s(static_cast<std::size_t>(n + r), static_cast<std::size_t>(r + k)) = spec.g.x_coeff(n - k);
    }
  }
  return s;
}

PolyMatrix bezout_matrix(const BiPoly& f, const BiPoly& g) {
  if (!(f.field() == g.field())) throw Error(ErrorCode::MixedFields, "Bezout matrix");
  const Field& field = f.field();
  const int k = std::max(f.deg_x(), g.deg_x());
  if (k < 1) throw Error(ErrorCode::DegreeZero, "Bezout matrix needs a positive x-degree");
  auto fc = [&](int i) { return f.x_coeff(i); };
  auto gc = [&](int i) { return g.x_coeff(i); };

  // Numerator N(x, z) = f(x)g(z) - f(z)g(x) = sum_{a,b} (f_a g_b - f_b g_a) x^a z^b,
  // divided by (x - z) one x-degree at a time, highest first.
  std::map<std::pair<int, int>, UniPoly> num;
  for (int a = 0; a <= k; ++a) {
    for (int b = 0; b <= k; ++b) {
      UniPoly c = fc(a) * gc(b) - fc(b) * gc(a);
      if (!c.is_zero()) num[{a, b}] = std::move(c);
    }
  }
  auto get = [&](const std::map<std::pair<int, int>, UniPoly>& mp, int a, int b) {
    auto it = mp.find({a, b});
    return it == mp.end() ? UniPoly(field) : it->second;
  };
  // N = (x - z) Q gives N_{a,b} = Q_{a-1,b} - Q_{a,b-1}.
  std::map<std::pair<int, int>, UniPoly> quo;
  for (int a = k; a >= 1; --a) {
    for (int b = 0; b <= k; ++b) {
      UniPoly q = get(num, a, b) + get(quo, a, b - 1);
      if (!q.is_zero()) quo[{a - 1, b}] = std::move(q);
    }
  }
  for (int b = 0; b <= k; ++b) {
    if (!(get(num, 0, b) + get(quo, 0, b - 1)).is_zero()) {
      throw Error(ErrorCode::InternalInconsistency, "Bezoutian numerator not divisible by x - z");
    }
  }
  const std::size_t kk = static_cast<std::size_t>(k);
  PolyMatrix bm(field, kk, kk);
  for (std::size_t i = 0; i < kk; ++i) {
    for (std::size_t j = 0; j < kk; ++j) {
      bm(i, j) = get(quo, k - 1 - static_cast<int>(j), k - 1 - static_cast<int>(i));
    }
  }
  return bm;
}

bool flip_identity_check(const BiPoly& f, const BiPoly& g) {
  const Field& field = f.field();
  const int k = std::max(f.deg_x(), g.deg_x());
  const std::size_t kk = static_cast<std::size_t>(k);
  PolyMatrix s = sylvester_matrix(SylvesterSpec{f, g, k, k});
  PolyMatrix b = bezout_matrix(f, g);
  PolyMatrix flip(field, kk, kk);
  for (std::size_t i = 0; i < kk; ++i) flip(i, kk - 1 - i) = UniPoly::constant(field.one());
  PolyMatrix j(field, 2 * kk, 2 * kk);
  j.set_block(0, kk, flip);
  j.set_block(kk, 0, -flip);
  PolyMatrix rhs(field, 2 * kk, 2 * kk);
  rhs.set_block(0, kk, b);
  rhs.set_block(kk, 0, -b);
  return s.transpose() * j * s == rhs;
}

UniPoly resultant(const BiPoly& f, const BiPoly& g) {
  return sylvester_matrix(SylvesterSpec::natural(f, g)).det();
}

UniPoly extraneous_factor(const BiPoly& f, const BiPoly& g) {
  const int m = f.deg_x(), n = g.deg_x();
  if (m > n) return f.x_coeff(m).pow(static_cast<unsigned>(m - n));
  if (n > m) return g.x_coeff(n).pow(static_cast<unsigned>(n - m));
  return UniPoly::constant(f.field().one());
}

Vector confluent_vandermonde(const Scalar& x0, int i, std::size_t k) {
  const Field& field = x0.field();
  Vector v(k, field.zero());
  for (std::size_t r = 1; r <= k; ++r) {
    long e = static_cast<long>(k - r);
    if (e < i) continue;
    v[r - 1] = binomial_in_field(field, static_cast<unsigned long>(e), static_cast<unsigned long>(i)) *
               x0.pow(static_cast<unsigned long>(e - i));
  }
  return v;
}

namespace {

// Gamma_len(p): coefficients of p from x^{len-1} down to x^0.
Vector gamma(const UniPoly& p, int len, const Field& field) {
  Vector v(static_cast<std::size_t>(len), field.zero());
  for (int e = 0; e <= p.degree(); ++e) {
    if (e >= len) throw Error(ErrorCode::InternalInconsistency, "coefficient vector too short");
    v[static_cast<std::size_t>(len - 1 - e)] = p.coeff(e);
  }
  return v;
}

void append_vandermonde(KernelData& out, std::size_t dim) {
  int found = 0;
  for (const auto& r : out.roots) {
    for (int i = 0; i < r.multiplicity; ++i) out.kernel.push_back(confluent_vandermonde(r.value, i, dim));
    found += r.multiplicity;
  }
  out.complete = found == out.h.degree();
}

}  // namespace

KernelData sylvester_kernel_basis(const SylvesterSpec& spec, const Scalar& y0) {
  spec.validate();
  const Field& field = spec.f.field();
  UniPoly fp = eval_y(spec.f, y0), gp = eval_y(spec.g, y0);
  if (fp.is_zero() && gp.is_zero()) {
    throw Error(ErrorCode::SpecializationVanishes, "f and g vanish identically at y = " + y0.to_string());
  }
  KernelData out;
  out.h = gcd(fp, gp);
  int sf = fp.is_zero() ? spec.m + spec.n + 1 : spec.m - fp.degree();
  int sg = gp.is_zero() ? spec.m + spec.n + 1 : spec.n - gp.degree();
  out.s = std::min(sf, sg);
  out.rank = static_cast<std::size_t>(spec.m + spec.n - out.s - out.h.degree());
  const std::size_t dim = static_cast<std::size_t>(spec.m + spec.n);
  for (int i = 0; i < out.s; ++i) {
    Vector e(dim, field.zero());
    e[static_cast<std::size_t>(i)] = field.one();
    out.kernel.push_back(std::move(e));
  }
  if (out.h.degree() > 0) out.roots = rational_roots(out.h);
  append_vandermonde(out, dim);

  UniPoly gq = *gp.divide_exact(out.h), fq = *fp.divide_exact(out.h);
  for (int i = 0; i < out.s + out.h.degree(); ++i) {
    UniPoly xi = UniPoly::monomial(field.one(), i, Var::X);
    Vector top = gamma(xi * gq, spec.n, field);
    Vector bottom = gamma(-(xi * fq), spec.m, field);
    top.insert(top.end(), bottom.begin(), bottom.end());
    out.cokernel.push_back(std::move(top));
  }
  return out;
}

KernelData bezout_kernel_basis(const BiPoly& f, const BiPoly& g, const Scalar& y0) {
  const Field& field = f.field();
  const int k = std::max(f.deg_x(), g.deg_x());
  if (k < 1) throw Error(ErrorCode::DegreeZero, "Bezout matrix needs a positive x-degree");
  UniPoly fp = eval_y(f, y0), gp = eval_y(g, y0);
  if (fp.is_zero() && gp.is_zero()) {
    throw Error(ErrorCode::SpecializationVanishes, "f and g vanish identically at y = " + y0.to_string());
  }
  KernelData out;
  out.h = gcd(fp, gp);
  out.s = k - std::max(fp.degree(), gp.degree());
  out.rank = static_cast<std::size_t>(k - out.s - out.h.degree());
  const std::size_t dim = static_cast<std::size_t>(k);
  for (int i = 0; i < out.s; ++i) {
    Vector e(dim, field.zero());
    e[static_cast<std::size_t>(i)] = field.one();
    out.kernel.push_back(std::move(e));
  }
  if (out.h.degree() > 0) out.roots = rational_roots(out.h);
  append_vandermonde(out, dim);
  out.cokernel = out.kernel;
  return out;
}

UniPoly x_content(const BiPoly& p) {
  UniPoly c(p.field());
  for (const auto& coeff : p.x_coeffs()) {
    if (!coeff.is_zero()) c = c.is_zero() ? coeff.monic() : gcd(c, coeff);
  }
  return c;
}

bool coprime(const BiPoly& f, const BiPoly& g) {
  if (f.is_zero() || g.is_zero()) return f.is_constant() && !f.is_zero() || g.is_constant() && !g.is_zero();
  if (!gcd(x_content(f), x_content(g)).is_constant()) return false;
  if (f.deg_x() == 0 || g.deg_x() == 0) return true;
  // Primitive parts share a factor of positive x-degree iff Res_x vanishes;
  // the contents only contribute factors of the resultant.
  return !resultant(f, g).is_zero();
}

}  // namespace resmith
