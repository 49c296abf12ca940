#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace resmith {

class Scalar;

/// The ground field: either the rationals or a prime field F_p with a
/// machine-word prime. Cheap to copy; two fields compare equal iff they have
/// the same characteristic.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(); }
  /// Throws InvalidField unless `p` is prime.
  static Field prime(std::uint64_t p);
  /// Accepts "Q" or "Fp:<prime>".
  static Field parse(std::string_view text);

  bool is_rational() const noexcept { return p_ == 0; }
  bool is_prime_field() const noexcept { return p_ != 0; }
  /// 0 for Q.
  std::uint64_t characteristic() const noexcept { return p_; }
  std::string name() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  Scalar from_integer(const mpz_class& v) const;
  /// Throws LiteralNotInField when `den` vanishes in the field.
  Scalar from_fraction(const mpz_class& num, const mpz_class& den) const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// An exact element of a Field. Rationals are kept in lowest terms with a
/// positive denominator; prime-field elements as residues in [0, p).
class Scalar {
 public:
  /// The rational zero; only meaningful as a placeholder.
  Scalar() : value_(mpq_class(0)) {}

  const Field& field() const noexcept { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Q only.
  const mpq_class& rational() const;
  /// F_p only.
  std::uint64_t residue() const;

  Scalar inv() const;
  Scalar pow(unsigned long e) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Total order used for deterministic output: numeric order on Q,
  /// residue order on F_p.
  friend int compare(const Scalar& a, const Scalar& b);
  friend bool operator<(const Scalar& a, const Scalar& b) { return compare(a, b) < 0; }

  /// "n" or "p/q" on Q; the canonical residue on F_p.
  std::string to_string() const;

 private:
  friend class Field;
  Scalar(Field f, mpq_class q) : field_(f), value_(std::move(q)) {}
  Scalar(Field f, std::uint64_t r) : field_(f), value_(r) {}
  void check_same(const Scalar& o) const;

  Field field_;
  std::variant<mpq_class, std::uint64_t> value_;
};

/// C(n, k) computed over the integers, then mapped into the field.
Scalar binomial_in_field(const Field& field, unsigned long n, unsigned long k);

}  // namespace resmith
