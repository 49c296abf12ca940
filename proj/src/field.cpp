#include "resmith/field.hpp"

#include <charconv>

#include "resmith/error.hpp"

namespace resmith {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return result;
}

std::uint64_t reduce(const mpz_class& v, std::uint64_t p) {
  // mpz_fdiv_ui takes an unsigned long, which is 64 bits on every target we build.
  return mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p));
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These witnesses are deterministic for all 64-bit n.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::InvalidField, std::to_string(p) + " is not prime");
  return Field(p);
}

Field Field::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.substr(0, 3) == "Fp:") {
    auto digits = text.substr(3);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty()) return prime(p);
  }
  throw Error(ErrorCode::InvalidField, "expected \"Q\" or \"Fp:<prime>\", got \"" + std::string(text) + "\"");
}

std::string Field::name() const { return p_ == 0 ? "Q" : "Fp:" + std::to_string(p_); }

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long v) const {
  if (p_ == 0) return Scalar(*this, mpq_class(static_cast<long>(v)));
  return from_integer(mpz_class(static_cast<long>(v)));
}

Scalar Field::from_integer(const mpz_class& v) const {
  if (p_ == 0) return Scalar(*this, mpq_class(v));
  return Scalar(*this, reduce(v, p_));
}

Scalar Field::from_fraction(const mpz_class& num, const mpz_class& den) const {
  if (p_ == 0) {
    if (den == 0) throw Error(ErrorCode::LiteralNotInField, "zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(*this, q);
  }
  std::uint64_t d = reduce(den, p_);
  if (d == 0) throw Error(ErrorCode::LiteralNotInField, "denominator vanishes in " + name());
  return from_integer(num) / Scalar(*this, d);
}

void Scalar::check_same(const Scalar& o) const {
  if (!(field_ == o.field_)) {
    throw Error(ErrorCode::MixedFields, "operands from " + field_.name() + " and " + o.field_.name());
  }
}

bool Scalar::is_zero() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_) == 0;
  return std::get<std::uint64_t>(value_) == 0;
}

bool Scalar::is_one() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_) == 1;
  return std::get<std::uint64_t>(value_) == 1;
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rational()) throw Error(ErrorCode::MixedFields, "rational() on a prime-field element");
  return std::get<mpq_class>(value_);
}

std::uint64_t Scalar::residue() const {
  if (field_.is_rational()) throw Error(ErrorCode::MixedFields, "residue() on a rational element");
  return std::get<std::uint64_t>(value_);
}

Scalar Scalar::inv() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (field_.is_rational()) return Scalar(field_, mpq_class(1) / std::get<mpq_class>(value_));
  std::uint64_t p = field_.characteristic();
  return Scalar(field_, powmod(std::get<std::uint64_t>(value_), p - 2, p));
}

Scalar Scalar::pow(unsigned long e) const {
  Scalar result = field_.one();
  Scalar base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
  } else {
    std::uint64_t p = field_.characteristic();
    auto& a = std::get<std::uint64_t>(value_);
    std::uint64_t b = std::get<std::uint64_t>(o.value_);
    a = (a >= p - b) ? a - (p - b) : a + b;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(o.value_);
  } else {
    std::uint64_t p = field_.characteristic();
    auto& a = std::get<std::uint64_t>(value_);
    std::uint64_t b = std::get<std::uint64_t>(o.value_);
    a = (a >= b) ? a - b : a + (p - b);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
  } else {
    auto& a = std::get<std::uint64_t>(value_);
    a = mulmod(a, std::get<std::uint64_t>(o.value_), field_.characteristic());
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same(o);
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) /= std::get<mpq_class>(o.value_);
    return *this;
  }
  return *this *= o.inv();
}

Scalar Scalar::operator-() const {
  if (field_.is_rational()) return Scalar(field_, mpq_class(-std::get<mpq_class>(value_)));
  std::uint64_t a = std::get<std::uint64_t>(value_);
  return Scalar(field_, a == 0 ? 0 : field_.characteristic() - a);
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.check_same(b);
  return a.value_ == b.value_;
}

int compare(const Scalar& a, const Scalar& b) {
  a.check_same(b);
  if (a.field_.is_rational()) return cmp(std::get<mpq_class>(a.value_), std::get<mpq_class>(b.value_));
  auto x = std::get<std::uint64_t>(a.value_);
  auto y = std::get<std::uint64_t>(b.value_);
  return x < y ? -1 : (x > y ? 1 : 0);
}

std::string Scalar::to_string() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_).get_str();
  return std::to_string(std::get<std::uint64_t>(value_));
}

Scalar binomial_in_field(const Field& field, unsigned long n, unsigned long k) {
  if (k > n) return field.zero();
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), n, k);
  return field.from_integer(c);
}

}  // namespace resmith
