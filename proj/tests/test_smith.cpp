#include <doctest.h>

#include "resmith/resultant.hpp"
#include "resmith/smith.hpp"
#include "oracles.hpp"

using namespace resmith;
using namespace testing_support;

namespace {

const Field Q = Field::rationals();

UniPoly Y(const char* s, const Field& f = Q) { return P(s, f).x_coeff(0); }

std::vector<UniPoly> ys(std::initializer_list<const char*> xs) {
  std::vector<UniPoly> out;
  for (auto s : xs) out.push_back(Y(s));
  return out;
}

void check_smith_contract(const PolyMatrix& m) { CHECK(smith_contract_holds(m)); }

}  // namespace

TEST_CASE("diagonal input is already in Smith form") {
  PolyMatrix m = PolyMatrix::from_rows(Q, {{Y("y^2"), Y("0")}, {Y("0"), Y("y^4")}});
  CHECK(smith_form(m).invariant_factors == ys({"y^2", "y^4"}));
  check_smith_contract(m);
}

TEST_CASE("Smith form of the tangential example") {
  PolyMatrix s = sylvester_matrix(SylvesterSpec{P("(x+y)^2"), P("x^3-y^3"), 2, 3});
  SmithForm sf = smith_form(s, true);
  CHECK(sf.invariant_factors == ys({"1", "1", "1", "y^2", "y^4"}));
  check_smith_contract(s);
  auto d = determinantal_divisors(s);
  REQUIRE(d.size() == 5);
  CHECK(d[2].is_one());
  CHECK(d[3] == Y("y^2"));
  CHECK(d[4] == Y("y^6"));
  PartialMultiplicities pm = partial_multiplicities(sf, Q.zero());
  CHECK(pm.kappas == std::vector<int>{4, 2});
  CHECK(pm.geometric() == 2);
  CHECK(pm.algebraic() == 6);
  CHECK(local_partial_multiplicities(s, Q.zero()) == std::vector<int>{4, 2});
  CHECK(partial_multiplicities(sf, Q.one()).kappas.empty());
}

TEST_CASE("Smith form of the infinity example") {
  PolyMatrix s = PolyMatrix::from_rows(Q, {{Y("y"), Y("1")}, {Y("y^2"), Y("-1")}});
  SmithForm sf = smith_form(s);
  CHECK(sf.invariant_factors == ys({"1", "y^2+y"}));
  auto d = determinantal_divisors(s);
  CHECK(d == ys({"1", "y^2+y"}));
  CHECK(partial_multiplicities(sf, -Q.one()).kappas == std::vector<int>{1});
  CHECK(partial_multiplicities(sf, Q.zero()).kappas == std::vector<int>{1});
}

TEST_CASE("identity and singular input") {
  auto d = determinantal_divisors(PolyMatrix::identity(Q, 4));
  REQUIRE(d.size() == 4);
  for (auto& x : d) CHECK(x.is_one());
  PolyMatrix sing = PolyMatrix::from_rows(Q, {{Y("y"), Y("y^2")}, {Y("1"), Y("y")}});
  SmithForm sf = smith_form(sing, true);
  CHECK(sf.invariant_factors[0].is_one());
  CHECK(sf.invariant_factors[1].is_zero());
  check_smith_contract(sing);
  PolyMatrix rect = PolyMatrix::from_rows(Q, {{Y("y"), Y("y^2"), Y("y+1")}, {Y("1"), Y("y"), Y("y-1")}});
  check_smith_contract(rect);
}

TEST_CASE("Smith form agrees with determinantal divisors on random matrices") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 60; ++t) {
    Field f = t % 2 ? Field::prime(101) : Q;
    std::size_t n = 2 + static_cast<std::size_t>(rng() % 3);
    PolyMatrix m = random_poly_matrix(f, rng, n, 3);
    // plant structure: multiply by a diagonal with repeated factors
    if (t % 3 == 0) {
      PolyMatrix d = PolyMatrix::identity(f, n);
      d(n - 1, n - 1) = UniPoly::linear_power(f.one(), 2);
      m = m * d * d;
    }
    check_smith_contract(m);
    UniPoly det = m.det();
    if (!det.is_zero()) {
      UniPoly prod = UniPoly::constant(f.one());
      for (auto& x : smith_form(m).invariant_factors) prod *= x;
      CHECK(prod == det.monic());
      SmithForm sf = smith_form(m);
      for (int v = -2; v <= 2; ++v) {
        Scalar y0 = f.from_int(v);
        CHECK(partial_multiplicities(sf, y0).kappas == local_partial_multiplicities(m, y0));
      }
    }
  }
}
