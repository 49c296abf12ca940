#include "resmith/analyze.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "resmith/error.hpp"
#include "resmith/resultant.hpp"
#include "resmith/rootvectors.hpp"
#include "resmith/roots.hpp"
#include "resmith/smith.hpp"

namespace resmith {

namespace {

constexpr int kPlantAttempts = 64;

Verdict pass_if(bool ok) { return ok ? Verdict::Pass : Verdict::Fail; }

std::vector<int> descending(std::vector<int> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

int sum(const std::vector<int>& v) {
  int s = 0;
  for (int x : v) s += x;
  return s;
}

// Base-field points of (f, g) on the line y = y0.
struct Line {
  std::vector<PointData> points;
  bool complete = true;
};

Line line_points(const BiPoly& f, const BiPoly& g, const Scalar& y0, const DualOptions& options) {
  UniPoly fy = eval_y(f, y0), gy = eval_y(g, y0);
  if (fy.is_zero() && gy.is_zero()) {
    throw Error(ErrorCode::NotZeroDimensional, "f and g both vanish on y = " + y0.to_string());
  }
  Line line;
  UniPoly h = gcd(fy, gy);
  if (h.degree() <= 0) return line;
  int found = 0;
  for (const auto& r : rational_roots(h)) {
    line.points.push_back(point_data(f, g, r.value, y0, options));
    found += r.multiplicity;
  }
  line.complete = found == h.degree();
  return line;
}

std::vector<int> alphas(const EigenRecord& e, const std::optional<InfinityReport>& inf) {
  std::vector<int> out;
  for (const auto& p : e.finite) out.insert(out.end(), p.indices.alpha.begin(), p.indices.alpha.end());
  if (inf) out.insert(out.end(), inf->indices.alpha.begin(), inf->indices.alpha.end());
  return descending(out);
}

int betas(const EigenRecord& e, const std::optional<InfinityReport>& inf) {
  int b = inf ? inf->indices.beta : 0;
  for (const auto& p : e.finite) b += p.indices.beta;
  return b;
}

int dims(const EigenRecord& e, const std::optional<InfinityReport>& inf) {
  int d = inf ? inf->multiplicity : 0;
  for (const auto& p : e.finite) d += p.dual_dim;
  return d;
}

std::vector<MoellerIndices> sorted_indices(std::vector<MoellerIndices> v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.alpha > b.alpha; });
  return v;
}

// The transformed pair and matrix used to certify an eigenvalue that
// carries an infinite intersection.
struct HatSide {
  MoebiusChoice choice;
  PolyMatrix matrix;
};

std::vector<int> orders_of(const std::vector<RootVector>& vs) {
  std::vector<int> o;
  for (const auto& v : vs) o.push_back(v.verified_order);
  return descending(o);
}

// Root vectors lifted at the finite points must be a maximal set whose
// orders are the kappas.
Verdict certify_direct(const PolyMatrix& mat, const Scalar& y0, const Line& line, const std::vector<int>& kappas) {
  RootSet rs = root_set(mat, y0, line.points);
  return pass_if(rs.maximal && rs.orders_reach_indices && orders_of(rs.vectors) == kappas);
}

// At infinity: certify the transformed matrix at its finite points, pull the
// vectors back and certify them against the original, and check that the
// indices moved with the points.
Verdict certify_through_map(const PolyMatrix& mat, const UniPoly& det, const Scalar& y0, const HatSide& hat,
                            const EigenRecord& e, const InfinityReport& inf, const std::vector<int>& kappas,
                            const DualOptions& options) {
  Line hat_line = line_points(hat.choice.f_hat, hat.choice.g_hat, y0, options);
  if (!hat_line.complete) return Verdict::Inconclusive;
  std::vector<MoellerIndices> moved, original;
  for (const auto& p : hat_line.points) moved.push_back(p.indices);
  for (const auto& p : e.finite) original.push_back(p.indices);
  original.push_back(inf.indices);
  if (sorted_indices(moved) != sorted_indices(original)) return Verdict::Fail;

  RootSet rs = root_set(hat.matrix, y0, hat_line.points);
  if (!rs.maximal) return Verdict::Fail;
  std::vector<RootVector> back;
  std::vector<Vector> at_y0;
  for (const auto& rv : rs.vectors) {
    back.push_back(verify_root_vector(mat, pull_back(rv.vec, hat.choice.map), y0, rv.claimed_order));
    at_y0.push_back(eval(back.back().vec, y0));
  }
  std::size_t kernel = mat.cols() - mat.eval(y0).rank();
  bool independent = rank_of(mat.field(), at_y0) == at_y0.size() && at_y0.size() == kernel;
  std::vector<int> orders = orders_of(back);
  return pass_if(independent && sum(orders) == root_multiplicity(det, y0) && orders == kappas);
}

template <class Fn>
Verdict guarded(bool complete, Fn&& fn) {
  if (!complete) return Verdict::Inconclusive;
  try {
    return fn();
  } catch (const Error&) {
    return Verdict::Fail;
  }
}

std::vector<Scalar> eigenvalue_candidates(const UniPoly& det_s, const UniPoly& det_b) {
  std::vector<Scalar> ys;
  for (const auto& r : rational_roots(det_s)) ys.push_back(r.value);
  for (const auto& r : rational_roots(det_b)) ys.push_back(r.value);
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  return ys;
}

bool splits(const UniPoly& p) {
  int found = 0;
  for (const auto& r : rational_roots(p)) found += r.multiplicity;
  return found == p.degree();
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

Verdict verdict_from_string(std::string_view s) {
  if (s == "pass") return Verdict::Pass;
  if (s == "fail") return Verdict::Fail;
  if (s == "inconclusive") return Verdict::Inconclusive;
  throw Error(ErrorCode::InternalInconsistency, "unknown verdict '" + std::string(s) + "'");
}

Verdict AnalysisReport::overall() const {
  bool inconclusive = false;
  auto scan = [&](const std::map<std::string, Verdict>& vs) {
    for (const auto& [name, v] : vs) {
      if (v == Verdict::Fail) return true;
      if (v == Verdict::Inconclusive) inconclusive = true;
    }
    return false;
  };
  if (scan(verdicts)) return Verdict::Fail;
  for (const auto& e : eigenvalues) {
    if (scan(e.verdicts)) return Verdict::Fail;
  }
  return inconclusive ? Verdict::Inconclusive : Verdict::Pass;
}

AnalysisReport analyze(const BiPoly& f, const BiPoly& g, const AnalyzeOptions& options) {
  if (f.field() != g.field()) throw Error(ErrorCode::MixedFields, "f and g live over different fields");
  const Field& field = f.field();
  auto [m, n] = options.grades.value_or(std::pair{std::max(f.deg_x(), 0), std::max(g.deg_x(), 0)});
  SylvesterSpec spec{f, g, m, n};
  spec.validate();
  const int k = std::max(f.deg_x(), g.deg_x());

  AnalysisReport rep;
  rep.input = {field, f, g, m, n, options.seed, false};
  if (!coprime(f, g)) throw Error(ErrorCode::NotZeroDimensional, "f and g share a nonconstant factor");
  rep.sylvester = sylvester_matrix(spec);
  rep.bezout = bezout_matrix(f, g);
  UniPoly det_s = rep.sylvester.det();
  if (det_s.is_zero()) throw Error(ErrorCode::NotZeroDimensional, "det S(y) vanishes identically");
  UniPoly det_b = rep.bezout.det();
  SmithForm snf_s = smith_form(rep.sylvester);
  SmithForm snf_b = smith_form(rep.bezout);
  rep.sylvester_smith = snf_s.invariant_factors;
  rep.bezout_smith = snf_b.invariant_factors;
  rep.resultant = resultant(f, g);
  rep.res_degree = rep.resultant.degree();
  rep.det_sylvester_degree = det_s.degree();
  rep.det_bezout_degree = det_b.degree();

  std::vector<Line> lines;
  std::vector<Scalar> forbidden;
  int bezout_infinity_dims = 0;
  bool all_complete = true;
  for (const auto& y0 : eigenvalue_candidates(det_s, det_b)) {
    EigenRecord e;
    e.y0 = y0;
    Line line = line_points(f, g, y0, options.dual);
    e.complete = line.complete;
    all_complete = all_complete && line.complete;
    for (const auto& p : line.points) {
      e.finite.push_back({p.x0, static_cast<int>(p.dual_dim), p.indices});
      rep.sum_dual_dims += static_cast<int>(p.dual_dim);
      if (std::find(forbidden.begin(), forbidden.end(), p.x0) == forbidden.end()) forbidden.push_back(p.x0);
    }
    InfinityReport inf_s = infinity_at(f, g, {m, n}, y0, options.dual);
    if (inf_s.is_infinite_intersection) {
      rep.sum_infinity_dims += inf_s.multiplicity;
      e.infinity = inf_s;
    }
    InfinityReport inf_b = infinity_at(f, g, {k, k}, y0, options.dual);
    if (inf_b.is_infinite_intersection) {
      bezout_infinity_dims += inf_b.multiplicity;
      e.infinity_bezout = inf_b;
    }
    e.kappa_sylvester = partial_multiplicities(snf_s, y0).kappas;
    e.kappa_bezout = partial_multiplicities(snf_b, y0).kappas;
    rep.eigenvalues.push_back(std::move(e));
    lines.push_back(std::move(line));
  }

  bool need_s = false, need_b = false;
  for (const auto& e : rep.eigenvalues) {
    need_s = need_s || e.infinity.has_value();
    need_b = need_b || e.infinity_bezout.has_value();
  }
  std::optional<HatSide> hat_s, hat_b;
  try {
    if (need_s) {
      MoebiusChoice c = choose_moebius(f, g, {m, n}, forbidden, options.seed);
      PolyMatrix s_hat = sylvester_matrix({c.f_hat, c.g_hat, m, n});
      hat_s = HatSide{c, s_hat};
      rep.moebius_sylvester = c.map;
    }
    if (need_b) {
      MoebiusChoice c = choose_moebius(f, g, {k, k}, forbidden, options.seed);
      PolyMatrix b_hat = bezout_matrix(c.f_hat, c.g_hat);
      hat_b = HatSide{c, b_hat};
      rep.moebius_bezout = c.map;
    }
  } catch (const Error& err) {
    if (err.code() != ErrorCode::ExhaustedField) throw;
  }

  for (std::size_t idx = 0; idx < rep.eigenvalues.size(); ++idx) {
    EigenRecord& e = rep.eigenvalues[idx];
    const Line& line = lines[idx];
    const Scalar& y0 = e.y0;
    auto& v = e.verdicts;
    const bool ok = e.complete;
    v["V1"] = ok ? pass_if(e.kappa_sylvester == alphas(e, e.infinity)) : Verdict::Inconclusive;
    v["V2"] = ok ? pass_if(e.kappa_bezout == alphas(e, e.infinity_bezout)) : Verdict::Inconclusive;
    v["V3"] = ok ? pass_if(static_cast<int>(e.kappa_sylvester.size()) == betas(e, e.infinity) &&
                           static_cast<int>(e.kappa_bezout.size()) == betas(e, e.infinity_bezout))
                 : Verdict::Inconclusive;
    v["V4"] = ok ? pass_if(sum(e.kappa_sylvester) == dims(e, e.infinity) &&
                           sum(e.kappa_sylvester) == root_multiplicity(det_s, y0) &&
                           sum(e.kappa_bezout) == dims(e, e.infinity_bezout) &&
                           sum(e.kappa_bezout) == root_multiplicity(det_b, y0))
                 : Verdict::Inconclusive;

    Verdict v6_s = guarded(ok, [&] {
      if (!e.infinity) return certify_direct(rep.sylvester, y0, line, e.kappa_sylvester);
      if (!hat_s) return Verdict::Inconclusive;
      return certify_through_map(rep.sylvester, det_s, y0, *hat_s, e, *e.infinity, e.kappa_sylvester,
                                 options.dual);
    });
    Verdict v6_b = guarded(ok, [&] {
      if (!e.infinity_bezout) return certify_direct(rep.bezout, y0, line, e.kappa_bezout);
      if (!hat_b) return Verdict::Inconclusive;
      return certify_through_map(rep.bezout, det_b, y0, *hat_b, e, *e.infinity_bezout, e.kappa_bezout,
                                 options.dual);
    });
    v["V6"] = (v6_s == Verdict::Fail || v6_b == Verdict::Fail) ? Verdict::Fail
              : (v6_s == Verdict::Inconclusive || v6_b == Verdict::Inconclusive) ? Verdict::Inconclusive
                                                                                  : Verdict::Pass;
  }

  if (!all_complete || !splits(det_s) || !splits(det_b)) {
    rep.verdicts["V5"] = Verdict::Inconclusive;
  } else {
    bool ok = rep.det_sylvester_degree == rep.sum_dual_dims + rep.sum_infinity_dims &&
              rep.det_bezout_degree == rep.sum_dual_dims + bezout_infinity_dims;
    if (rep.sum_infinity_dims == 0 && m == f.deg_x() && n == g.deg_x()) {
      ok = ok && rep.res_degree == rep.sum_dual_dims;
    }
    rep.verdicts["V5"] = pass_if(ok);
  }
  UniPoly c_res = extraneous_factor(f, g) * rep.resultant;
  rep.verdicts["V7"] = pass_if(flip_identity_check(f, g) && (det_b == c_res || det_b == -c_res));
  return rep;
}

AnalysisReport swap_variables_analyze(const BiPoly& f, const BiPoly& g, const AnalyzeOptions& options) {
  AnalysisReport rep = analyze(swap_xy(f), swap_xy(g), options);
  rep.input.f = f;
  rep.input.g = g;
  rep.input.swapped = true;
  return rep;
}

PlantedSystem plant_system(const PlantRequest& request, std::uint64_t seed) {
  const Field& field = request.field;
  if (request.points.empty()) throw Error(ErrorCode::GenerationFailed, "no points requested");
  std::set<std::pair<Scalar, Scalar>> seen;
  for (const auto& p : request.points) {
    if (!seen.insert({p.x0, p.y0}).second) throw Error(ErrorCode::GenerationFailed, "requested points repeat");
    if (p.order < 1) throw Error(ErrorCode::GenerationFailed, "point order must be positive");
  }
  std::mt19937_64 rng(seed);
  auto small = [&](int span, bool nonzero) {
    while (true) {
      long long v = static_cast<long long>(rng() % static_cast<std::uint64_t>(2 * span + 1)) - span;
      if (!nonzero || v != 0) return field.from_int(v);
    }
  };
  const BiPoly x = BiPoly::x(field), y = BiPoly::y(field);
  const BiPoly one = BiPoly::constant(field.one());
  auto line = [&](const PlantedPoint& p, const Scalar& slope) {
    return x - BiPoly::constant(p.x0) - slope * (y - BiPoly::constant(p.y0));
  };

  for (int attempt = 1; attempt <= kPlantAttempts; ++attempt) {
    std::vector<BiPoly> fs, gs;
    for (std::size_t i = 0; i < request.points.size(); ++i) {
      const PlantedPoint& p = request.points[i];
      // The point sent to infinity needs non-vertical lines, or x = a would
      // become a component of the transformed curve.
      bool slanted = request.send_to_infinity && i == 0;
      Scalar tau = small(2, slanted);
      Scalar tau2 = small(2, slanted);
      while (tau2 == tau) tau2 = small(2, slanted);
      BiPoly u = line(p, tau);
      switch (p.shape) {
        case PointShape::Transversal:
          fs.push_back(u);
          gs.push_back(line(p, tau2));
          break;
        case PointShape::Tangential: {
          BiPoly bend = (y - BiPoly::constant(p.y0)).pow(static_cast<unsigned>(p.order));
          fs.push_back(u);
          gs.push_back(u - small(2, true) * bend);
          break;
        }
        case PointShape::Power:
          fs.push_back(u.pow(static_cast<unsigned>(p.order)));
          gs.push_back(line(p, tau2));
          break;
      }
    }
    // Each planted point must see only its own pair of curves.
    bool isolated = true;
    for (std::size_t i = 0; i < request.points.size(); ++i) {
      for (std::size_t j = 0; j < request.points.size(); ++j) {
        if (i == j) continue;
        const PlantedPoint& p = request.points[i];
        if (eval(fs[j], p.x0, p.y0).is_zero() || eval(gs[j], p.x0, p.y0).is_zero()) isolated = false;
      }
    }
    if (!isolated) continue;
    BiPoly f = one, g = one;
    for (const auto& c : fs) f = f * c;
    for (const auto& c : gs) g = g * c;
    if (request.mix) {
      BiPoly c = rng() % 2 ? BiPoly::constant(small(2, true)) : y - BiPoly::constant(small(2, false));
      if (g.deg_x() >= f.deg_x()) {
        g += c * x.pow(static_cast<unsigned>(g.deg_x() - f.deg_x())) * f;
      } else {
        f += BiPoly::constant(small(2, true)) * x.pow(static_cast<unsigned>(f.deg_x() - g.deg_x())) * g;
      }
    }
    if (!coprime(f, g)) continue;

    PlantedSystem out{f, g, std::nullopt, attempt};
    if (request.send_to_infinity) {
      Scalar a = request.points.front().x0;
      Scalar d = small(3, false);
      MoebiusMap map(a, a * d - field.one(), field.one(), d);
      BiPoly fh = moebius_substitute(f, map), gh = moebius_substitute(g, map);
      if (fh.deg_x() != f.deg_x() || gh.deg_x() != g.deg_x() || !coprime(fh, gh)) continue;
      out = {fh, gh, map, attempt};
    }
    UniPoly res = resultant(out.f, out.g);
    if (res.is_zero() || !splits(res) || !splits(extraneous_factor(out.f, out.g))) continue;
    return out;
  }
  throw Error(ErrorCode::GenerationFailed, "no admissible system in " + std::to_string(kPlantAttempts) + " draws");
}

}  // namespace resmith
