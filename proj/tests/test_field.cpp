#include <doctest.h>

#include <random>

#include "resmith/error.hpp"
#include "resmith/field.hpp"
#include "resmith/poly.hpp"
#include "resmith/roots.hpp"

using namespace resmith;

namespace {

Scalar q(long n, long d = 1) { return Field::rationals().from_fraction(n, d); }

UniPoly upoly(const Field& f, std::vector<long> cs) {
  std::vector<Scalar> v;
  for (long c : cs) v.push_back(f.from_int(c));
  return UniPoly(f, v);
}

}  // namespace

TEST_CASE("rational arithmetic") {
  CHECK(q(1, 2) + q(1, 3) == q(5, 6));
  CHECK(q(2, 4).to_string() == "1/2");
  CHECK(q(-3, -6).to_string() == "1/2");
  CHECK(q(3, -6).to_string() == "-1/2");
  CHECK_THROWS_AS(q(0).inv(), Error);
  try {
    (void)q(0).inv();
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DivisionByZero);
  }
}

TEST_CASE("prime field arithmetic") {
  Field f7 = Field::prime(7);
  CHECK(f7.from_int(3) * f7.from_int(5) == f7.one());
  CHECK(f7.from_int(-1).residue() == 6);
  CHECK(f7.from_fraction(1, 2) * f7.from_int(2) == f7.one());
  CHECK_THROWS_AS(Field::prime(9), Error);
  CHECK_THROWS_AS(f7.zero().inv(), Error);
  CHECK(Field::parse("Fp:101") == Field::prime(101));
  CHECK(Field::parse("Q").is_rational());
  CHECK_THROWS_AS(Field::parse("Fp:100"), Error);
  CHECK_THROWS_AS(Field::prime(2).from_fraction(1, 2), Error);
}

TEST_CASE("mixed fields are rejected") {
  try {
    (void)(Field::prime(5).one() + Field::prime(7).one());
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MixedFields);
  }
}

TEST_CASE("field laws on random elements") {
  std::mt19937_64 rng(1);
  for (const Field& f : {Field::rationals(), Field::prime(101), Field::prime(2)}) {
    auto rnd = [&] {
      long n = static_cast<long>(rng() % 41) - 20;
      long d = static_cast<long>(rng() % 9) + 1;
      if (f.characteristic() != 0 && d % static_cast<long>(f.characteristic()) == 0) d = 1;
      return f.from_fraction(n, d);
    };
    for (int t = 0; t < 200; ++t) {
      Scalar a = rnd(), b = rnd(), c = rnd();
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      if (!a.is_zero()) CHECK(a * a.inv() == f.one());
    }
  }
}

TEST_CASE("binomial_in_field") {
  CHECK(binomial_in_field(Field::rationals(), 4, 2) == q(6));
  CHECK(binomial_in_field(Field::prime(2), 2, 2).is_one());
  CHECK(binomial_in_field(Field::prime(2), 4, 2).is_zero());
  for (unsigned long n = 0; n < 10; ++n) CHECK(binomial_in_field(Field::rationals(), n, 0).is_one());
}

TEST_CASE("is_prime") {
  CHECK(is_prime(2));
  CHECK(is_prime(101));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(561));
  CHECK(is_prime(18446744073709551557ULL));
  CHECK_FALSE(is_prime(18446744073709551555ULL));
}

TEST_CASE("rational_roots over Q") {
  Field Q = Field::rationals();
  auto r = rational_roots(upoly(Q, {0, -1, 1}));
  REQUIRE(r.size() == 2);
  CHECK(r[0] == Root{q(0), 1});
  CHECK(r[1] == Root{q(1), 1});

  auto y6 = rational_roots(UniPoly::monomial(Q.one(), 6));
  REQUIRE(y6.size() == 1);
  CHECK(y6[0] == Root{q(0), 6});

  auto r2 = rational_roots(upoly(Q, {0, -1, -1}));
  REQUIRE(r2.size() == 2);
  CHECK(r2[0] == Root{q(-1), 1});
  CHECK(r2[1] == Root{q(0), 1});

  CHECK_THROWS_AS(rational_roots(UniPoly(Q)), Error);
  CHECK(rational_roots(upoly(Q, {1, 0, 1})).empty());
}

TEST_CASE("rational_roots finds planted fractions with multiplicity") {
  Field Q = Field::rationals();
  std::mt19937_64 rng(7);
  for (int t = 0; t < 40; ++t) {
    std::vector<std::pair<Scalar, int>> planted;
    UniPoly p = UniPoly::constant(Q.from_int(static_cast<long>(rng() % 5) + 1));
    int count = static_cast<int>(rng() % 4) + 1;
    for (int k = 0; k < count; ++k) {
      Scalar r = Q.from_fraction(static_cast<long>(rng() % 31) - 15, static_cast<long>(rng() % 6) + 1);
      int mu = static_cast<int>(rng() % 3) + 1;
      bool dup = false;
      for (auto& [v, m] : planted) {
        if (v == r) {
          m += mu;
          dup = true;
        }
      }
      if (!dup) planted.push_back({r, mu});
      p *= UniPoly::linear_power(r, mu);
    }
    p *= upoly(Q, {3, 0, 1});  // irreducible noise
    auto roots = rational_roots(p);
    REQUIRE(roots.size() == planted.size());
    for (auto& [v, m] : planted) {
      bool found = false;
      for (auto& r : roots) {
        if (r.value == v) {
          CHECK(r.multiplicity == m);
          found = true;
        }
      }
      CHECK(found);
    }
  }
}

TEST_CASE("rational_roots over prime fields") {
  Field f7 = Field::prime(7);
  auto r = rational_roots(upoly(f7, {1, 0, 1}));  // y^2+1 irreducible mod 7
  CHECK(r.empty());
  auto r2 = rational_roots(upoly(f7, {-1, 0, 1}));
  REQUIRE(r2.size() == 2);
  CHECK(r2[0].value.residue() == 1);
  CHECK(r2[1].value.residue() == 6);

  // large prime: equal-degree splitting path
  Field big = Field::prime(1000000007ULL);
  UniPoly p = UniPoly::linear_power(big.from_int(5), 2) * UniPoly::linear(big.from_int(123456)) *
              upoly(big, {1, 0, 1}) * UniPoly::linear(big.from_int(-9));
  auto r3 = rational_roots(p);
  std::size_t expected = 3;
  // y^2+1 splits mod p iff p = 1 mod 4
  if (1000000007ULL % 4 == 1) expected += 2;
  CHECK(r3.size() == expected);
  CHECK(root_multiplicity(p, big.from_int(5)) == 2);
}

TEST_CASE("rational_roots sums multiplicities at most the degree") {
  Field f5 = Field::prime(5);
  UniPoly p = upoly(f5, {1, 2, 3, 4, 0, 1});
  int total = 0;
  for (auto& r : rational_roots(p)) {
    total += r.multiplicity;
    UniPoly a = UniPoly::linear_power(r.value, r.multiplicity);
    CHECK(p.divide_exact(a).has_value());
    CHECK_FALSE(p.divide_exact(a * UniPoly::linear(r.value)).has_value());
  }
  CHECK(total <= p.degree());
}
