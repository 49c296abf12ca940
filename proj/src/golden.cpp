#include "resmith/golden.hpp"

#include <functional>
#include <sstream>

#include "resmith/analyze.hpp"
#include "resmith/error.hpp"
#include "resmith/infinity.hpp"
#include "resmith/parser.hpp"
#include "resmith/rootvectors.hpp"
#include "resmith/smith.hpp"

namespace resmith {

namespace {

const Field Q = Field::rationals();

BiPoly P(const char* s) { return parse_poly(s, Q); }

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : ", ") + x;
  return "[" + out + "]";
}

std::string join(const std::vector<int>& xs) {
  std::vector<std::string> s;
  for (int x : xs) s.push_back(std::to_string(x));
  return join(s);
}

std::string join(const std::vector<UniPoly>& ps) {
  std::vector<std::string> s;
  for (const auto& p : ps) s.push_back(p.to_string());
  return join(s);
}

using Check = std::function<bool(std::string&)>;

bool gauss_basis_check(std::string& detail) {
  DualSpace v = dual_space(P("(x+y)^2"), P("x^3-y^3"), Q.zero(), Q.zero());
  std::vector<std::string> got;
  for (const auto& e : gauss_basis(v, LexOrder::XLessY).elements) got.push_back(e.to_string());
  detail = join(got);
  return got == std::vector<std::string>{"D[0,0]", "D[1,0]", "D[0,1]", "D[1,1]-2*D[2,0]", "D[0,2]-D[2,0]",
                                         "D[0,3]-1/3*D[1,2]-1/3*D[2,1]+D[3,0]"};
}

bool moeller_check(std::string& detail) {
  DualSpace v = dual_space(P("(x+y)^2"), P("x^3-y^3"), Q.zero(), Q.zero());
  MoellerIndices mi = moeller_indices(gauss_basis(v, LexOrder::XLessY));
  detail = "beta " + std::to_string(mi.beta) + ", alpha " + join(mi.alpha);
  return mi == MoellerIndices{2, {4, 2}};
}

bool smith_check(std::string& detail) {
  auto inv = smith_form(sylvester_matrix(SylvesterSpec::natural(P("(x+y)^2"), P("x^3-y^3")))).invariant_factors;
  detail = join(inv);
  return detail == "[1, 1, 1, y^2, y^4]";
}

bool root_vector_check(std::string& detail) {
  BiPoly f = P("(x+y)^2"), g = P("x^3-y^3");
  PolyMatrix s = sylvester_matrix(SylvesterSpec::natural(f, g));
  PointData pd = point_data(f, g, Q.zero(), Q.zero());
  PolyVector r0 = lift_functional(pd.leading[0], Q.zero(), Q.zero(), 3, 5);
  PolyVector r1 = lift_functional(pd.leading[1], Q.zero(), Q.zero(), 1, 5);
  RootVector v0 = verify_root_vector(s, r0, Q.zero(), 4);
  RootVector v1 = verify_root_vector(s, r1, Q.zero(), 2);
  detail = "r0 " + join(r0) + " order " + std::to_string(v0.verified_order) + " quotient " +
           join(v0.quotient) + "; r1 " + join(r1) + " order " + std::to_string(v1.verified_order) +
           " quotient " + join(v1.quotient);
  return join(r0) == "[0, y^3, -1/3*y^2, -1/3*y, 1]" && join(r1) == "[0, 0, -2*y, 1, 0]" &&
         v0.verified_order == 4 && join(v0.quotient) == "[5/3, 0, 0, 1/3, 0]" && v1.verified_order == 2 &&
         join(v1.quotient) == "[-2*y, -3, 0, -y, 0]";
}

bool bezout_check(std::string& detail) {
  SmithForm sf = smith_form(bezout_matrix(P("(x+y)^2"), P("x^3-y^3")));
  auto k = partial_multiplicities(sf, Q.zero()).kappas;
  detail = join(k);
  return k == std::vector<int>{4, 2};
}

bool infinity_check(std::string& detail) {
  BiPoly f = P("x*y+1"), g = P("x*y^2-1");
  PolyMatrix s = sylvester_matrix(SylvesterSpec::natural(f, g));
  auto reports = infinite_intersections(f, g, {1, 1});
  AnalysisReport r = analyze(f, g);
  std::ostringstream os;
  os << "S " << join(std::vector<std::string>{s(0, 0).to_string(), s(0, 1).to_string(), s(1, 0).to_string(),
                                              s(1, 1).to_string()});
  bool ok = s(0, 0).to_string() == "y" && s(0, 1).to_string() == "1" && s(1, 0).to_string() == "y^2" &&
            s(1, 1).to_string() == "-1";
  ok = ok && reports.size() == 1 && reports[0].y0.is_zero() && reports[0].multiplicity == 1;
  os << ", eigenvalues";
  for (const auto& e : r.eigenvalues) os << " " << e.y0.to_string() << ":" << join(e.kappa_sylvester);
  ok = ok && r.eigenvalues.size() == 2 && r.eigenvalues[0].y0 == Q.from_int(-1) && r.eigenvalues[1].y0.is_zero();
  for (const auto& e : r.eigenvalues) ok = ok && e.kappa_sylvester == std::vector<int>{1};
  ok = ok && r.res_degree == 2 && r.sum_dual_dims == 1 && r.sum_infinity_dims == 1 && r.overall() == Verdict::Pass;
  MoebiusChoice ch = choose_moebius(f, g, {1, 1}, {Q.one()}, 0);
  PolyMatrix sh = sylvester_matrix({ch.f_hat, ch.g_hat, 1, 1});
  ok = ok && infinite_intersections(ch.f_hat, ch.g_hat, {1, 1}).empty() &&
       strict_equivalence_check(s, sh, ch.map, {1, 1}) &&
       smith_form(s).invariant_factors == smith_form(sh).invariant_factors;
  detail = os.str();
  return ok;
}

bool conditioning_check(std::string& detail) {
  BiPoly f = P("y^2+x"), g = P("y^2-x");
  DualSpace v = dual_space(f, g, Q.zero(), Q.zero());
  MoellerIndices wrt_y = moeller_indices(gauss_basis(v, LexOrder::XLessY));
  MoellerIndices wrt_x = moeller_indices(gauss_basis(v, LexOrder::YLessX));
  auto ky = partial_multiplicities(smith_form(sylvester_matrix(SylvesterSpec::natural(f, g))), Q.zero()).kappas;
  BiPoly fs = swap_xy(f), gs = swap_xy(g);
  auto kx = partial_multiplicities(smith_form(sylvester_matrix(SylvesterSpec::natural(fs, gs))), Q.zero()).kappas;
  detail = "wrt y " + join(wrt_y.alpha) + ", wrt x " + join(wrt_x.alpha) + ", kappa S(y) " + join(ky) +
           ", kappa S(x) " + join(kx);
  return wrt_y == MoellerIndices{1, {2}} && wrt_x == MoellerIndices{2, {1, 1}} && ky == std::vector<int>{2} &&
         kx == std::vector<int>{1, 1};
}

}  // namespace

std::vector<GoldenResult> run_golden_checks() {
  const std::vector<std::pair<std::string, Check>> checks = {
      {"Gauss basis of <(x+y)^2, x^3-y^3> at the origin", gauss_basis_check},
      {"Moeller indices (4,2) with respect to y", moeller_check},
      {"Smith form of S(y) is 1,1,1,y^2,y^4", smith_check},
      {"root vectors r0, r1 and their orders", root_vector_check},
      {"Bezout partial multiplicities {4,2}", bezout_check},
      {"intersection at infinity of xy+1, xy^2-1", infinity_check},
      {"defective in y, semisimple in x for y^2+x, y^2-x", conditioning_check},
  };
  std::vector<GoldenResult> out;
  for (const auto& [name, check] : checks) {
    GoldenResult r{name, false, ""};
    try {
      r.passed = check(r.detail);
    } catch (const Error& e) {
      r.detail = e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace resmith
