#include <doctest.h>

#include <algorithm>

#include "resmith/infinity.hpp"
#include "resmith/rootvectors.hpp"
#include "resmith/smith.hpp"
#include "support.hpp"

using namespace resmith;
using namespace testing_support;

namespace {

const Field Q = Field::rationals();

UniPoly Y(const char* s) { return P(s).x_coeff(0); }

// Sum of dual dimensions over base-field points on the line y = y0, or -1
// if some x-root lies outside the field.
int finite_dims(const BiPoly& f, const BiPoly& g, const Scalar& y0) {
  UniPoly h = gcd(eval_y(f, y0), eval_y(g, y0));
  if (h.degree() <= 0) return 0;
  int total = 0, found = 0;
  for (auto& r : rational_roots(h)) {
    total += static_cast<int>(dual_space(f, g, r.value, y0).dim());
    found += r.multiplicity;
  }
  return found == h.degree() ? total : -1;
}

}  // namespace

TEST_CASE("infinite intersections of the hyperbola pair") {
  BiPoly f = P("x*y+1"), g = P("x*y^2-1");
  PolyMatrix s = sylvester_matrix(SylvesterSpec::natural(f, g));
  CHECK(s == PolyMatrix::from_rows(Q, {{Y("y"), Y("1")}, {Y("y^2"), Y("-1")}}));

  auto reports = infinite_intersections(f, g, {1, 1});
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].y0 == Q.zero());
  CHECK(reports[0].is_infinite_intersection);
  CHECK(reports[0].multiplicity == 1);
  CHECK(reports[0].indices == MoellerIndices{1, {1}});

  // deg Res = 2, the finite point (1, -1) accounts for one, infinity for the other.
  CHECK(resultant(f, g).degree() == 2);
  CHECK(finite_dims(f, g, Q.from_int(-1)) == 1);
  CHECK(finite_dims(f, g, Q.zero()) == 0);

  CHECK(infinite_intersections(P("(x+y)^2"), P("x^3-y^3"), {2, 3}).empty());
  CHECK(!infinity_at(f, g, {1, 1}, Q.one()).is_infinite_intersection);
}

TEST_CASE("indices at infinity come from the reversed pair") {
  BiPoly f = P("y*x^2+1"), g = P("y*x^2+x");
  auto reports = infinite_intersections(f, g, {2, 2});
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].y0 == Q.zero());
  DualSpace v = dual_space(P("y+x^2"), P("y+x"), Q.zero(), Q.zero());
  MoellerIndices expected = moeller_indices(gauss_basis(v, LexOrder::XLessY));
  CHECK(reports[0].multiplicity == static_cast<int>(v.dim()));
  CHECK(reports[0].indices == expected);
  CHECK(expected == MoellerIndices{1, {1}});
}

TEST_CASE("oversized grades put the roots of the other leading coefficient at infinity") {
  BiPoly f = P("x*y+1"), g = P("x*y^2-1");
  auto reports = infinite_intersections(f, g, {2, 1});
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].y0 == Q.zero());
  // <x(x+y), x-y^2> at the origin: x = y^2 leaves y^3(y+1).
  CHECK(reports[0].multiplicity == 3);
  PolyMatrix s = sylvester_matrix({f, g, 2, 1});
  CHECK(root_multiplicity(s.det(), Q.zero()) == 3);
  CHECK(code_of([&] { infinite_intersections(f, g, {2, 2}); }) == ErrorCode::NotZeroDimensional);
  CHECK(code_of([&] { infinite_intersections(P("x*y"), P("x*y^2"), {1, 1}); }) == ErrorCode::NotZeroDimensional);
}

TEST_CASE("valuations of det S split into finite and infinite parts") {
  std::mt19937_64 rng(11);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    // A shared linear factor in the leading coefficients forces infinity at y = r.
    Scalar r = small_scalar(Q, rng, 3);
    UniPoly shared = UniPoly::linear(r);
    BiPoly f = random_bipoly(Q, rng, 1, 2) + BiPoly::from_uni(shared * random_unipoly(Q, rng, 1)) * P("x^2");
    BiPoly g = random_bipoly(Q, rng, 0, 2) + BiPoly::from_uni(shared) * P("x");
    if (f.deg_x() != 2 || g.deg_x() != 1 || !coprime(f, g)) continue;
    SylvesterSpec spec = SylvesterSpec::natural(f, g);
    UniPoly det = sylvester_matrix(spec).det();
    bool complete = true;
    for (auto& root : rational_roots(det)) {
      int fin = finite_dims(f, g, root.value);
      if (fin < 0) {
        complete = false;
        continue;
      }
      InfinityReport inf = infinity_at(f, g, {spec.m, spec.n}, root.value);
      CHECK(root.multiplicity == fin + inf.multiplicity);
      CHECK(inf.indices.total() == inf.multiplicity);
    }
    if (complete) ++checked;
  }
  CHECK(checked > 10);
}

TEST_CASE("choosing a Moebius map") {
  BiPoly f = P("x*y+1"), g = P("x*y^2-1");
  MoebiusChoice ch = choose_moebius(f, g, {1, 1}, {Q.zero(), Q.one()}, 0);
  const MoebiusMap& m = ch.map;
  CHECK(m.c() == Q.one());
  CHECK((m.a() * m.d() - m.b() * m.c()).is_one());
  CHECK(m.a() != Q.zero());
  CHECK(m.a() != Q.one());
  CHECK(gcd(grade_lead(ch.f_hat, 1), grade_lead(ch.g_hat, 1)).is_one());
  CHECK(infinite_intersections(ch.f_hat, ch.g_hat, {1, 1}).empty());
  CHECK(coprime(ch.f_hat, ch.g_hat));

  // Same seed, same map.
  MoebiusChoice again = choose_moebius(f, g, {1, 1}, {Q.zero(), Q.one()}, 0);
  CHECK(again.map.a() == m.a());
  CHECK(again.map.d() == m.d());

  CHECK(code_of([] { MoebiusMap(Q.one(), Q.zero(), Q.zero(), Q.one()); }) == ErrorCode::InvalidMoebius);
  CHECK(code_of([] { MoebiusMap(Q.one(), Q.one(), Q.one(), Q.one()); }) == ErrorCode::InvalidMoebius);

  Field F2 = Field::prime(2);
  CHECK(code_of([&] {
          choose_moebius(P("x*y+1", F2), P("x+y", F2), {1, 1}, {F2.zero(), F2.one()}, 0);
        }) == ErrorCode::ExhaustedField);
  // Over F_2 both choices of a leave the transformed leading coefficients y and y.
  CHECK(code_of([&] {
          choose_moebius(P("y*(x^2+x+1)", F2), P("x^2+x+y", F2), {2, 2}, {}, 3);
        }) == ErrorCode::ExhaustedField);
}

TEST_CASE("strict equivalence and congruence under Moebius maps") {
  BiPoly f = P("x*y+1"), g = P("x*y^2-1");
  MoebiusChoice ch = choose_moebius(f, g, {1, 1}, {Q.one()}, 5);
  PolyMatrix s = sylvester_matrix({f, g, 1, 1});
  PolyMatrix sh = sylvester_matrix({ch.f_hat, ch.g_hat, 1, 1});
  CHECK(strict_equivalence_check(s, sh, ch.map, {1, 1}));
  CHECK(smith_form(s).invariant_factors == smith_form(sh).invariant_factors);
  CHECK(!strict_equivalence_check(s, s, ch.map, {1, 1}));
  CHECK(code_of([&] { strict_equivalence_check(s, sh, ch.map, {2, 1}); }) == ErrorCode::DimensionMismatch);

  // Multiplicity at infinity reappears at the pole, the finite point at its preimage.
  DualSpace at_pole = dual_space(ch.f_hat, ch.g_hat, ch.map.pole(), Q.zero());
  CHECK(at_pole.dim() == 1);
  Scalar z1 = ch.map.preimage(Q.one());
  CHECK(dual_space(ch.f_hat, ch.g_hat, z1, Q.from_int(-1)).dim() == 1);

  std::mt19937_64 rng(3);
  int done = 0;
  for (int trial = 0; trial < 80 && done < 25; ++trial) {
    BiPoly a = random_bipoly(Q, rng, 2, 2), b = random_bipoly(Q, rng, 2, 1);
    if (a.deg_x() < 1 || b.deg_x() < 1 || !coprime(a, b)) continue;
    int m = a.deg_x(), n = b.deg_x(), k = std::max(m, n);
    MoebiusChoice c1 = choose_moebius(a, b, {m, n}, {}, static_cast<std::uint64_t>(trial));
    PolyMatrix sa = sylvester_matrix({a, b, m, n});
    PolyMatrix s1 = sylvester_matrix({c1.f_hat, c1.g_hat, m, n});
    CHECK(strict_equivalence_check(sa, s1, c1.map, {m, n}));
    auto snf = smith_form(sa).invariant_factors;
    CHECK(snf == smith_form(s1).invariant_factors);

    // A second map on top of the first keeps the Smith form.
    MoebiusChoice c2 = choose_moebius(c1.f_hat, c1.g_hat, {m, n}, {}, static_cast<std::uint64_t>(trial) + 100);
    PolyMatrix s2 = sylvester_matrix({c2.f_hat, c2.g_hat, m, n});
    CHECK(strict_equivalence_check(s1, s2, c2.map, {m, n}));
    CHECK(smith_form(s2).invariant_factors == snf);

    MoebiusChoice ck = choose_moebius(a, b, {k, k}, {}, static_cast<std::uint64_t>(trial));
    CHECK(bezout_congruence_check(bezout_matrix(a, b), bezout_matrix(ck.f_hat, ck.g_hat), ck.map));
    ++done;
  }
  CHECK(done == 25);
}

TEST_CASE("Moebius matrices act on monomial vectors") {
  MoebiusMap m(Q.from_int(2), Q.from_int(3), Q.one(), Q.from_int(2));
  Matrix m3 = moebius_matrix(m, 3);
  // Rows: (2z+3)^2, (2z+3)(z+2), (z+2)^2.
  CHECK(m3 == Matrix::from_rows(Q, {{Q.from_int(4), Q.from_int(12), Q.from_int(9)},
                                    {Q.from_int(2), Q.from_int(7), Q.from_int(6)},
                                    {Q.from_int(1), Q.from_int(4), Q.from_int(4)}}));
}

TEST_CASE("root vectors at infinity pulled back through the map") {
  BiPoly f = P("x*y+1"), g = P("x*y^2-1");
  MoebiusChoice ch = choose_moebius(f, g, {1, 1}, {Q.one()}, 0);
  PolyMatrix s = sylvester_matrix({f, g, 1, 1});
  PointData pole = point_data(ch.f_hat, ch.g_hat, ch.map.pole(), Q.zero());
  RootSet hat = sylvester_root_set({ch.f_hat, ch.g_hat, 1, 1}, Q.zero(), {pole});
  CHECK(hat.maximal);
  for (auto& rv : hat.vectors) {
    RootVector back = verify_root_vector(s, pull_back(rv.vec, ch.map), Q.zero());
    CHECK(back.verified_order == rv.verified_order);
  }
  // The finite points alone leave a kernel direction unexplained.
  CHECK(code_of([&] { sylvester_root_set({f, g, 1, 1}, Q.zero(), {}); }) == ErrorCode::IncompleteVariety);
}
