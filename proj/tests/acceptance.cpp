#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "oracles.hpp"
#include "resmith/analyze.hpp"
#include "resmith/dual.hpp"
#include "resmith/golden.hpp"
#include "resmith/report_json.hpp"

using namespace resmith;
using namespace testing_support;

namespace {

const Field Q = Field::rationals();
constexpr double kBudgetSeconds = 5.0;

struct Outcome {
  bool ok = false;
  std::string detail;
};

Outcome golden_subset(std::size_t from, std::size_t to) {
  auto results = run_golden_checks();
  Outcome out{true, ""};
  for (std::size_t i = from; i < to && i < results.size(); ++i) {
    if (!results[i].passed) {
      out.ok = false;
      out.detail += results[i].name + ": got " + results[i].detail + "; ";
    }
  }
  if (out.ok) out.detail = std::to_string(to - from) + " checks";
  return out;
}

Outcome snf_oracle() {
  std::mt19937_64 rng(2024);
  int done = 0, failed = 0;
  for (int t = 0; t < 200; ++t) {
    Field f = t % 2 ? Field::prime(101) : Q;
    std::size_t n = 2 + static_cast<std::size_t>(t % 5);
    PolyMatrix m = random_poly_matrix(f, rng, n, n >= 5 ? 2 : 4);
    if (t % 4 == 0) {
      // repeated factors so the chain is nontrivial
      PolyMatrix d = PolyMatrix::identity(f, n);
      d(n - 1, n - 1) = UniPoly::linear_power(f.one(), 2);
      d(n - 2, n - 2) = UniPoly::linear_power(f.one(), 1);
      m = m * d;
    }
    ++done;
    if (!smith_contract_holds(m)) ++failed;
  }
  return {failed == 0, std::to_string(done) + " matrices, " + std::to_string(failed) + " failed"};
}

Outcome structural_identities() {
  std::mt19937_64 rng(77);
  int done = 0, failed = 0;
  while (done < 200) {
    Field fld = done % 2 ? Field::prime(101) : Q;
    BiPoly f = random_bipoly(fld, rng, static_cast<int>(rng() % 4) + 1, static_cast<int>(rng() % 4));
    BiPoly g = random_bipoly(fld, rng, static_cast<int>(rng() % 5), static_cast<int>(rng() % 4));
    if (f.deg_x() < 0 || g.deg_x() < 0 || std::max(f.deg_x(), g.deg_x()) < 1) continue;
    ++done;
    bool ok = flip_identity_check(f, g);
    PolyMatrix b = bezout_matrix(f, g);
    Scalar y0 = small_scalar(fld, rng, 3);
    ok = ok && b == b.transpose() && b.eval(y0) == bezout_by_division(f, g, y0);
    UniPoly db = b.det(), cr = extraneous_factor(f, g) * resultant(f, g);
    ok = ok && (db == cr || db == -cr);
    SylvesterSpec spec{f, g, f.deg_x() + static_cast<int>(rng() % 2), g.deg_x() + static_cast<int>(rng() % 2)};
    ok = ok && sylvester_defining_identity(spec);
    if (!(eval_y(f, y0).is_zero() && eval_y(g, y0).is_zero())) {
      Matrix s0 = sylvester_matrix(spec).eval(y0);
      KernelData kd = sylvester_kernel_basis(spec, y0);
      ok = ok && kd.rank == s0.rank() && kd.cokernel.size() == s0.rows() - kd.rank;
      for (const auto& v : kd.kernel) ok = ok && is_zero_vector(s0 * v);
      for (const auto& w : kd.cokernel) ok = ok && is_zero_vector(s0.transpose() * w);
      if (kd.complete) ok = ok && kd.kernel.size() == s0.cols() - kd.rank;
      Matrix b0 = b.eval(y0);
      KernelData bk = bezout_kernel_basis(f, g, y0);
      ok = ok && bk.rank == b0.rank();
      for (const auto& v : bk.kernel) ok = ok && is_zero_vector(b0 * v);
      if (bk.complete) ok = ok && bk.kernel.size() == b0.cols() - bk.rank;
    }
    if (!ok) ++failed;
  }
  return {failed == 0, std::to_string(done) + " pairs, " + std::to_string(failed) + " failed"};
}

Outcome planted_systems() {
  std::mt19937_64 rng(5);
  const PointShape shapes[] = {PointShape::Transversal, PointShape::Tangential, PointShape::Power};
  int done = 0, failed = 0, with_infinity = 0, generation_failures = 0;
  std::string first_failure;
  for (int t = 0; done < 100 && t < 200; ++t) {
    PlantRequest req{Q, {}, t % 4 == 3, t % 3 != 0};
    std::size_t count = 1 + static_cast<std::size_t>(rng() % 2);
    for (std::size_t i = 0; i < count; ++i) {
      PlantedPoint p{small_scalar(Q, rng, 3), small_scalar(Q, rng, 3), shapes[(static_cast<std::size_t>(t) + i) % 3],
                     2 + static_cast<int>(rng() % 2)};
      req.points.push_back(p);
    }
    if (count == 2 && req.points[0].x0 == req.points[1].x0 && req.points[0].y0 == req.points[1].y0) continue;
    PlantedSystem sys;
    try {
      sys = plant_system(req, rng());
    } catch (const Error&) {
      ++generation_failures;
      continue;
    }
    ++done;
    try {
      AnalysisReport r = analyze(sys.f, sys.g);
      if (r.sum_infinity_dims > 0) ++with_infinity;
      if (r.overall() != Verdict::Pass) {
        ++failed;
        if (first_failure.empty()) first_failure = "; first failure f = " + sys.f.to_string() + ", g = " + sys.g.to_string();
      }
    } catch (const Error& e) {
      ++failed;
      if (first_failure.empty()) first_failure = std::string("; ") + e.what();
    }
  }
  return {failed == 0 && done >= 100 && with_infinity > 0,
          std::to_string(done) + " systems, " + std::to_string(with_infinity) + " with infinity, " +
              std::to_string(failed) + " failed, " + std::to_string(generation_failures) + " regenerated" +
              first_failure};
}

Outcome monomial_ideals() {
  int done = 0, failed = 0;
  std::mt19937_64 rng(9);
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      for (const Field& fld : {Q, Field::prime(101)}) {
        Scalar x0 = small_scalar(fld, rng, 3), y0 = small_scalar(fld, rng, 3);
        BiPoly u = BiPoly::x(fld) - BiPoly::constant(x0), w = BiPoly::y(fld) - BiPoly::constant(y0);
        BiPoly ua = u.pow(static_cast<unsigned>(a)), wb = w.pow(static_cast<unsigned>(b));
        // other generators of the same ideal <u^a, w^b>
        BiPoly f = ua + wb * u, g = wb * (BiPoly::constant(fld.one()) + u) + ua;
        ++done;
        DualSpace v = dual_space(f, g, x0, y0);
        MoellerIndices mi = moeller_indices(gauss_basis(v, LexOrder::XLessY));
        bool ok = v.dim() == static_cast<std::size_t>(a * b) && mi.beta == a &&
                  mi.alpha == std::vector<int>(static_cast<std::size_t>(a), b);
        if (!ok) ++failed;
      }
    }
  }
  return {failed == 0, std::to_string(done) + " ideals, " + std::to_string(failed) + " failed"};
}

Outcome deterministic_json() {
  const char* pairs[][2] = {{"(x+y)^2", "x^3-y^3"}, {"x*y+1", "x*y^2-1"}, {"y*x^2+x-y", "x-y"}, {"y^2+x", "y^2-x"}};
  int done = 0, failed = 0;
  for (const auto& pr : pairs) {
    for (std::uint64_t seed : {0ULL, 11ULL}) {
      AnalyzeOptions opt;
      opt.seed = seed;
      std::string first = report_to_json(analyze(P(pr[0]), P(pr[1]), opt));
      std::string second = report_to_json(analyze(P(pr[0]), P(pr[1]), opt));
      ++done;
      if (first != second || report_to_json(report_from_json(first)) != first) ++failed;
    }
  }
  return {failed == 0, std::to_string(done) + " reports, " + std::to_string(failed) + " differed"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"tangential example: Gauss basis, Moeller indices, Smith form, root vectors, Bezout",
       [] { return golden_subset(0, 5); }},
      {"intersection at infinity and the Moebius map", [] { return golden_subset(5, 6); }},
      {"indices depend on the chosen variable", [] { return golden_subset(6, 7); }},
      {"Smith form against determinantal divisors (200 random matrices)", snf_oracle},
      {"Sylvester and Bezout structural identities (200 random pairs)", structural_identities},
      {"planted systems pass every verdict (100 over Q)", planted_systems},
      {"translated monomial ideals <x^a, y^b>", monomial_ideals},
      {"analysis JSON is byte-identical across runs", deterministic_json},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const Error& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > kBudgetSeconds) {
      o.ok = false;
      o.detail += ", over the time budget";
    }
    if (!o.ok) ++failures;
    std::printf("%s  %zu  %s (%s, %.2f s)\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), secs);
  }
  return failures == 0 ? 0 : 1;
}
