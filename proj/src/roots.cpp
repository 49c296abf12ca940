#include "resmith/roots.hpp"

#include <algorithm>
#include <random>

#include "resmith/error.hpp"

namespace resmith {

namespace {

constexpr std::uint64_t kExhaustiveLimit = 1u << 16;

// Integer coefficient vector of a nonzero rational polynomial, made primitive.
std::vector<mpz_class> primitive_integer_form(const UniPoly& p) {
  mpz_class lcm_den = 1;
  for (const auto& c : p.coeffs()) {
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.rational().get_den_mpz_t());
  }
  std::vector<mpz_class> out;
  out.reserve(p.coeffs().size());
  mpz_class content = 0;
  for (const auto& c : p.coeffs()) {
    mpq_class scaled = c.rational() * lcm_den;
    out.push_back(scaled.get_num());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out.back().get_mpz_t());
  }
  if (out.back() < 0) content = -content;
  for (auto& c : out) c /= content;
  return out;
}

mpz_class eval_mod(const std::vector<mpz_class>& a, const mpz_class& x, const mpz_class& mod) {
  mpz_class acc = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    acc = (acc * x + *it) % mod;
  }
  if (acc < 0) acc += mod;
  return acc;
}

std::vector<mpz_class> derivative(const std::vector<mpz_class>& a) {
  std::vector<mpz_class> d;
  for (std::size_t k = 1; k < a.size(); ++k) d.push_back(a[k] * static_cast<unsigned long>(k));
  return d;
}

UniPoly reduce_mod(const std::vector<mpz_class>& a, const Field& fp) {
  std::vector<Scalar> cs;
  cs.reserve(a.size());
  for (const auto& c : a) cs.push_back(fp.from_integer(c));
  return UniPoly(fp, std::move(cs));
}

// x^e mod m in F_p[y].
UniPoly powmod(const UniPoly& base, mpz_class e, const UniPoly& m) {
  UniPoly result = UniPoly::constant(m.field().one(), m.var());
  UniPoly b = base.divmod(m).second;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = (result * b).divmod(m).second;
    e >>= 1;
    if (e > 0) b = (b * b).divmod(m).second;
  }
  return result;
}

// Roots of a squarefree product of distinct linear factors over F_p.
void split_linear(const UniPoly& g, std::mt19937_64& rng, std::vector<Scalar>& out) {
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    out.push_back(-g.coeff(0) / g.coeff(1));
    return;
  }
  const Field& f = g.field();
  std::uint64_t p = f.characteristic();
  if (p == 2) {
    // Only 0 and 1 are candidates.
    for (std::uint64_t v : {0ULL, 1ULL}) {
      Scalar s = f.from_int(static_cast<long long>(v));
      if (g(s).is_zero()) out.push_back(s);
    }
    return;
  }
  mpz_class half = (mpz_class(static_cast<unsigned long>(p)) - 1) / 2;
  while (true) {
    Scalar delta = f.from_integer(mpz_class(static_cast<unsigned long>(rng() % p)));
    UniPoly shifted(f, {delta, f.one()}, g.var());
    UniPoly h = powmod(shifted, half, g) - UniPoly::constant(f.one(), g.var());
    if (h.is_zero()) continue;
    UniPoly d = gcd(g, h);
    if (d.degree() > 0 && d.degree() < g.degree()) {
      split_linear(d, rng, out);
      split_linear(*g.divide_exact(d), rng, out);
      return;
    }
  }
}

std::vector<Scalar> prime_field_roots(const UniPoly& p) {
  const Field& f = p.field();
  std::uint64_t q = f.characteristic();
  std::vector<Scalar> found;
  if (q <= kExhaustiveLimit) {
    for (std::uint64_t v = 0; v < q; ++v) {
      Scalar s = f.from_integer(mpz_class(static_cast<unsigned long>(v)));
      if (p(s).is_zero()) found.push_back(s);
    }
    return found;
  }
  UniPoly m = p.monic();
  UniPoly ypow = powmod(UniPoly::monomial(f.one(), 1, p.var()), mpz_class(static_cast<unsigned long>(q)), m);
  UniPoly lin = gcd(m, ypow - UniPoly::monomial(f.one(), 1, p.var()));
  std::mt19937_64 rng(0x5eed);
  split_linear(lin, rng, found);
  return found;
}

std::vector<Scalar> rational_field_roots(const UniPoly& p) {
  const Field& Q = p.field();
  std::vector<Scalar> found;
  UniPoly rest = p;
  if (rest.coeff(0).is_zero()) {
    found.push_back(Q.zero());
    while (rest.coeff(0).is_zero()) rest = *rest.divide_exact(UniPoly::monomial(Q.one(), 1, p.var()));
  }
  UniPoly sqfree = rest;
  if (rest.degree() > 0) sqfree = *rest.divide_exact(gcd(rest, rest.hasse(1)));
  if (sqfree.degree() <= 0) return found;

  std::vector<mpz_class> a = primitive_integer_form(sqfree);
  std::vector<mpz_class> da = derivative(a);
  const mpz_class& lead = a.back();
  mpz_class height = 0;
  for (const auto& c : a) {
    mpz_class ac = abs(c);
    if (ac > height) height = ac;
  }
  // |lead * root| <= |lead| + max |a_i|.
  mpz_class bound = 2 * (abs(lead) + height) + 1;

  std::uint64_t prime = 3;
  while (true) {
    if (is_prime(prime) && mpz_fdiv_ui(lead.get_mpz_t(), prime) != 0) {
      Field fp = Field::prime(prime);
      UniPoly red = reduce_mod(a, fp);
      if (red.degree() == sqfree.degree() && gcd(red, red.hasse(1)).is_one()) break;
    }
    ++prime;
  }

  Field fp = Field::prime(prime);
  UniPoly red = reduce_mod(a, fp);
  std::vector<Scalar> modular;
  for (std::uint64_t v = 0; v < prime; ++v) {
    Scalar s = fp.from_integer(mpz_class(static_cast<unsigned long>(v)));
    if (red(s).is_zero()) modular.push_back(s);
  }

  for (const auto& r0 : modular) {
    mpz_class root = static_cast<unsigned long>(r0.residue());
    mpz_class mod = static_cast<unsigned long>(prime);
    while (mod <= bound) {
      mpz_class mod2 = mod * mod;
      mpz_class value = eval_mod(a, root, mod2);
      mpz_class slope = eval_mod(da, root, mod2);
      mpz_class inv;
      mpz_invert(inv.get_mpz_t(), slope.get_mpz_t(), mod2.get_mpz_t());
      root = (root - value * inv) % mod2;
      if (root < 0) root += mod2;
      mod = mod2;
    }
    mpz_class c = (lead * root) % mod;
    if (c < 0) c += mod;
    if (2 * c > mod) c -= mod;
    Scalar candidate = Q.from_fraction(c, lead);
    if (sqfree(candidate).is_zero()) found.push_back(candidate);
  }
  return found;
}

}  // namespace

std::vector<Root> rational_roots(const UniPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "roots of the zero polynomial");
  std::vector<Scalar> values =
      p.field().is_rational() ? rational_field_roots(p) : prime_field_roots(p);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::vector<Root> out;
  out.reserve(values.size());
  for (auto& v : values) {
    int mu = root_multiplicity(p, v);
    out.push_back({std::move(v), mu});
  }
  return out;
}

}  // namespace resmith
