#include <doctest.h>

#include <random>

#include "resmith/error.hpp"
#include "resmith/parser.hpp"
#include "resmith/poly.hpp"

using namespace resmith;

namespace {

const Field Q = Field::rationals();

BiPoly P(const char* s, const Field& f = Q) { return parse_poly(s, f); }

BiPoly random_bipoly(const Field& f, std::mt19937_64& rng, int dx, int dy) {
  BiPoly p(f);
  for (int i = 0; i <= dx; ++i) {
    for (int j = 0; j <= dy; ++j) {
      if (rng() % 3 == 0) continue;
      p.add_term(i, j, f.from_int(static_cast<long long>(rng() % 11) - 5));
    }
  }
  return p;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InternalInconsistency;
}

}  // namespace

TEST_CASE("bivariate arithmetic and exact division") {
  CHECK(P("(x+y)*(x-y)") == P("x^2-y^2"));
  CHECK(exact_div(P("x^2-y^2"), P("x-y")) == P("x+y"));
  CHECK(code_of([] { exact_div(P("x^2+1"), P("y")); }) == ErrorCode::NotDivisible);
  CHECK(P("(x+y)^2").to_string() == "y^2+2*x*y+x^2");
  CHECK(P("x*y^2-1").to_string() == "x*y^2-1");
}

TEST_CASE("hasse derivatives") {
  CHECK(hasse_derivative(P("x^2*y"), 1, 0) == P("2*x*y"));
  Field f2 = Field::prime(2);
  CHECK(hasse_derivative(P("x^2", f2), 2, 0) == P("1", f2));

  std::mt19937_64 rng(3);
  for (const Field& f : {Q, Field::prime(3), Field::prime(2)}) {
    for (int t = 0; t < 30; ++t) {
      BiPoly a = random_bipoly(f, rng, 4, 3), b = random_bipoly(f, rng, 3, 3);
      for (int i = 0; i <= 3; ++i) {
        for (int j = 0; j <= 3; ++j) {
          CHECK(hasse_derivative(a, i, j) == hasse_derivative(hasse_derivative(a, i, 0), 0, j));
          CHECK(hasse_derivative(a, i, j) == hasse_derivative(hasse_derivative(a, 0, j), i, 0));
        }
      }
      // Leibniz: D_{ij}(ab) = sum_{k<=i, l<=j} D_{i-k,j-l}a D_{kl}b
      for (int i = 0; i <= 2; ++i) {
        for (int j = 0; j <= 2; ++j) {
          BiPoly rhs(f);
          for (int k = 0; k <= i; ++k) {
            for (int l = 0; l <= j; ++l) rhs += hasse_derivative(a, i - k, j - l) * hasse_derivative(b, k, l);
          }
          CHECK(hasse_derivative(a * b, i, j) == rhs);
        }
      }
    }
  }
}

TEST_CASE("root multiplicity") {
  UniPoly p = UniPoly::linear_power(Q.one(), 3) * UniPoly::linear(Q.from_int(-2));
  CHECK(root_multiplicity(p, Q.one()) == 3);
  CHECK(root_multiplicity_hasse(p, Q.one()) == 3);
  CHECK(root_multiplicity(UniPoly::monomial(Q.one(), 6), Q.zero()) == 6);
  CHECK(root_multiplicity(p, Q.from_int(5)) == 0);
  CHECK(code_of([] { root_multiplicity(UniPoly(Q), Q.zero()); }) == ErrorCode::ZeroPolynomial);
  for (std::uint64_t pr : {2ULL, 3ULL, 5ULL, 7ULL}) {
    Field f = Field::prime(pr);
    UniPoly yp = UniPoly::monomial(f.one(), static_cast<int>(pr));
    CHECK(root_multiplicity(yp, f.zero()) == static_cast<int>(pr));
    CHECK(root_multiplicity_hasse(yp, f.zero()) == static_cast<int>(pr));
  }
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    Field f = t % 2 ? Field::prime(5) : Q;
    Scalar r = f.from_int(static_cast<long long>(rng() % 5));
    UniPoly u = UniPoly::linear_power(r, static_cast<int>(rng() % 7)) *
                UniPoly(f, {f.from_int(static_cast<long long>(rng() % 4) + 1), f.one(), f.one()});
    CHECK(root_multiplicity(u, r) == root_multiplicity_hasse(u, r));
  }
}

TEST_CASE("univariate gcd") {
  UniPoly f = eval_y(P("(x+y)^2"), Q.zero());
  UniPoly g = eval_y(P("x^3-y^3"), Q.zero());
  CHECK(gcd(f, g) == UniPoly::monomial(Q.one(), 2, Var::X));
  CHECK(gcd(UniPoly::linear(Q.one()), UniPoly::linear(-Q.one())).is_one());
  UniPoly p(Q, {Q.from_int(2), Q.from_int(4)});
  CHECK(gcd(p, UniPoly(Q)) == p.monic());
  CHECK(code_of([] { gcd(UniPoly(Q), UniPoly(Q)); }) == ErrorCode::BothZero);

  std::mt19937_64 rng(5);
  for (int t = 0; t < 60; ++t) {
    Field fld = t % 2 ? Field::prime(101) : Q;
    auto rnd = [&](int deg) {
      std::vector<Scalar> c;
      for (int k = 0; k <= deg; ++k) c.push_back(fld.from_int(static_cast<long long>(rng() % 9) - 4));
      c.back() = fld.one();
      return UniPoly(fld, c);
    };
    UniPoly common = rnd(2), a = rnd(3), b = rnd(2);
    UniPoly d = gcd(common * a, common * b);
    CHECK(d.lead().is_one());
    CHECK((common * a).divide_exact(d).has_value());
    CHECK((common * b).divide_exact(d).has_value());
    CHECK(d.divide_exact(common.monic()).has_value());
  }
}

TEST_CASE("reversal") {
  CHECK(reverse_x(P("x*y+1"), 1) == P("x+y"));
  CHECK(reverse_x(P("x*y^2-1"), 1) == P("-x+y^2"));
  CHECK(reverse_x(P("x*y+1"), 2) == P("x^2+x*y"));
  CHECK(code_of([] { reverse_x(P("x^3"), 2); }) == ErrorCode::GradeTooSmall);
  BiPoly p = P("3*x^3*y-x+y^2+2");
  CHECK(reverse_x(reverse_x(p)) == p);
}

TEST_CASE("moebius substitution") {
  MoebiusMap m(Q.one(), Q.one(), Q.one(), Q.from_int(2));
  CHECK(moebius_substitute(P("x"), m) == P("x+1"));
  CHECK(code_of([] { MoebiusMap(Q.one(), Q.zero(), Q.zero(), Q.one()); }) == ErrorCode::InvalidMoebius);
  CHECK(code_of([] { MoebiusMap(Q.one(), Q.one(), Q.one(), Q.one()); }) == ErrorCode::InvalidMoebius);

  std::mt19937_64 rng(9);
  for (int t = 0; t < 30; ++t) {
    BiPoly f = random_bipoly(Q, rng, 3, 2);
    if (f.deg_x() < 1) continue;
    Scalar a = Q.from_int(static_cast<long long>(rng() % 7) - 3), d = Q.from_int(static_cast<long long>(rng() % 5) + 1);
    MoebiusMap mm(a, a * d - Q.one(), Q.one(), d);
    BiPoly fh = moebius_substitute(f, mm);
    // leading z-coefficient is c^m f(a/c, y)
    int m = f.deg_x();
    UniPoly lead = fh.x_coeff(m);
    CHECK(lead == eval_x(f, a / mm.c()) * mm.c().pow(static_cast<unsigned long>(m)));
    // psi(x) = (d x - b)/(a - c x) undoes phi; substituting back recovers a unit multiple
    MoebiusMap inv(-d, mm.b(), mm.c(), -a);  // x = (-d z + b)/(z - a)
    BiPoly back = moebius_substitute(fh, inv, m);
    auto q = try_exact_div(back, f);
    REQUIRE(q.has_value());
    CHECK(q->is_constant());
  }
}

TEST_CASE("evaluation") {
  BiPoly f = P("(x+y)^2");
  CHECK(eval(f, Q.zero(), Q.zero()).is_zero());
  CHECK(eval_y(f, Q.zero()) == UniPoly::monomial(Q.one(), 2, Var::X));
  CHECK(eval_x(f, Q.one()) == UniPoly::linear_power(-Q.one(), 2));
  BiPoly t = translate(P("x^2*y-3*x+y"), Q.from_int(2), Q.from_int(-1));
  CHECK(t == P("(x+2)^2*(y-1)-3*(x+2)+(y-1)"));
}

TEST_CASE("parser") {
  CHECK(P("x*y^2-1") == BiPoly::monomial(Q.one(), 1, 2) - BiPoly::constant(Q.one()));
  CHECK(P(" 1/2 * x - -y ") == BiPoly::monomial(Q.from_fraction(1, 2), 1, 0) + BiPoly::y(Q));
  CHECK(P("2^3") == P("8"));
  CHECK(P("-x^2") == -P("x^2"));
  CHECK(code_of([] { P("x^-1"); }) == ErrorCode::NegativeExponent);
  CHECK(code_of([] { P("2x"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { P("x+z"); }) == ErrorCode::UnknownVariable);
  CHECK(code_of([] { P("1/2*x", Field::prime(2)); }) == ErrorCode::LiteralNotInField);
  CHECK(code_of([] { P(""); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { P("(x+y"); }) == ErrorCode::SyntaxError);
  try {
    P("x+*y");
  } catch (const Error& e) {
    CHECK(e.position() == std::optional<std::size_t>(3));
  }
  try {
    P("x + y)");
  } catch (const Error& e) {
    CHECK(e.position() == std::optional<std::size_t>(6));
  }
}

TEST_CASE("printer round-trip") {
  std::mt19937_64 rng(13);
  for (const Field& f : {Q, Field::prime(7)}) {
    for (int t = 0; t < 200; ++t) {
      BiPoly p(f);
      for (int k = 0; k < 5; ++k) {
        long n = static_cast<long>(rng() % 21) - 10, d = static_cast<long>(rng() % 4) + 1;
        if (f.characteristic() == 7) d = 1;
        p.add_term(static_cast<int>(rng() % 4), static_cast<int>(rng() % 4), f.from_fraction(n, d));
      }
      CHECK(parse_poly(p.to_string(), f) == p);
    }
  }
}
