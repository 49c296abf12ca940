#include "resmith/report_json.hpp"

#include <json.hpp>

#include "resmith/error.hpp"
#include "resmith/parser.hpp"

namespace resmith {

namespace {

using Json = nlohmann::ordered_json;

Json matrix_json(const PolyMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m.to_strings()) rows.push_back(row);
  return rows;
}

Json polys_json(const std::vector<UniPoly>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

Json indices_json(const InfinityReport& r) {
  return {{"multiplicity", r.multiplicity}, {"beta", r.indices.beta}, {"alpha", r.indices.alpha}};
}

Json verdicts_json(const std::map<std::string, Verdict>& vs) {
  Json out = Json::object();
  for (const auto& [name, v] : vs) out[name] = std::string(to_string(v));
  return out;
}

Json map_json(const std::optional<MoebiusMap>& m) {
  if (!m) return nullptr;
  return {m->a().to_string(), m->b().to_string(), m->c().to_string(), m->d().to_string()};
}

Scalar scalar_from(const Json& j, const Field& field) {
  BiPoly p = parse_poly(j.get<std::string>(), field);
  if (!p.is_constant()) throw Error(ErrorCode::SyntaxError, "expected a field element, got " + j.dump());
  return p.coeff(0, 0);
}

UniPoly uni_from(const Json& j, const Field& field) {
  BiPoly p = parse_poly(j.get<std::string>(), field);
  if (p.deg_x() > 0) throw Error(ErrorCode::SyntaxError, "expected a polynomial in y, got " + j.dump());
  return p.x_coeff(0);
}

PolyMatrix matrix_from(const Json& j, const Field& field) {
  std::vector<PolyVector> rows;
  for (const auto& row : j) {
    PolyVector r;
    for (const auto& e : row) r.push_back(uni_from(e, field));
    rows.push_back(std::move(r));
  }
  if (rows.empty()) return PolyMatrix(field, 0, 0);
  return PolyMatrix::from_rows(field, rows);
}

std::vector<UniPoly> polys_from(const Json& j, const Field& field) {
  std::vector<UniPoly> out;
  for (const auto& e : j) out.push_back(uni_from(e, field));
  return out;
}

std::optional<InfinityReport> infinity_from(const Json& j, const Scalar& y0) {
  if (j.is_null()) return std::nullopt;
  InfinityReport r;
  r.y0 = y0;
  r.is_infinite_intersection = true;
  r.multiplicity = j.at("multiplicity").get<int>();
  r.indices = {j.at("beta").get<int>(), j.at("alpha").get<std::vector<int>>()};
  return r;
}

std::map<std::string, Verdict> verdicts_from(const Json& j) {
  std::map<std::string, Verdict> out;
  for (const auto& [name, v] : j.items()) out[name] = verdict_from_string(v.get<std::string>());
  return out;
}

std::optional<MoebiusMap> map_from(const Json& j, const Field& field) {
  if (j.is_null()) return std::nullopt;
  return MoebiusMap(scalar_from(j.at(0), field), scalar_from(j.at(1), field), scalar_from(j.at(2), field),
                    scalar_from(j.at(3), field));
}

}  // namespace

std::string report_to_json(const AnalysisReport& r) {
  Json doc;
  doc["input"] = {{"field", r.input.field.name()},
                  {"f", r.input.f.to_string()},
                  {"g", r.input.g.to_string()},
                  {"grades", {r.input.m, r.input.n}},
                  {"seed", r.input.seed},
                  {"swapped", r.input.swapped}};
  doc["sylvester"] = {{"matrix", matrix_json(r.sylvester)}, {"smith", polys_json(r.sylvester_smith)}};
  doc["bezout"] = {{"matrix", matrix_json(r.bezout)}, {"smith", polys_json(r.bezout_smith)}};
  Json eig = Json::array();
  for (const auto& e : r.eigenvalues) {
    Json finite = Json::array();
    for (const auto& p : e.finite) {
      finite.push_back({{"x0", p.x0.to_string()},
                        {"beta", p.indices.beta},
                        {"alpha", p.indices.alpha},
                        {"dual_dim", p.dual_dim}});
    }
    eig.push_back({{"y0", e.y0.to_string()},
                   {"finite", finite},
                   {"complete", e.complete},
                   {"infinity", e.infinity ? indices_json(*e.infinity) : Json(nullptr)},
                   {"infinity_bezout", e.infinity_bezout ? indices_json(*e.infinity_bezout) : Json(nullptr)},
                   {"kappa_sylvester", e.kappa_sylvester},
                   {"kappa_bezout", e.kappa_bezout},
                   {"verdicts", verdicts_json(e.verdicts)}});
  }
  doc["eigenvalues"] = eig;
  doc["global"] = {{"resultant", r.resultant.to_string()},
                   {"res_degree", r.res_degree},
                   {"det_sylvester_degree", r.det_sylvester_degree},
                   {"det_bezout_degree", r.det_bezout_degree},
                   {"sum_dual_dims", r.sum_dual_dims},
                   {"sum_infinity_dims", r.sum_infinity_dims},
                   {"moebius_sylvester", map_json(r.moebius_sylvester)},
                   {"moebius_bezout", map_json(r.moebius_bezout)},
                   {"verdicts", verdicts_json(r.verdicts)},
                   {"overall", std::string(to_string(r.overall()))}};
  return doc.dump(2) + "\n";
}

AnalysisReport report_from_json(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::SyntaxError, std::string("report is not valid JSON: ") + e.what());
  }
  try {
    AnalysisReport r;
    const Json& in = doc.at("input");
    Field field = Field::parse(in.at("field").get<std::string>());
    r.input = {field,
               parse_poly(in.at("f").get<std::string>(), field),
               parse_poly(in.at("g").get<std::string>(), field),
               in.at("grades").at(0).get<int>(),
               in.at("grades").at(1).get<int>(),
               in.at("seed").get<std::uint64_t>(),
               in.at("swapped").get<bool>()};
    r.sylvester = matrix_from(doc.at("sylvester").at("matrix"), field);
    r.sylvester_smith = polys_from(doc.at("sylvester").at("smith"), field);
    r.bezout = matrix_from(doc.at("bezout").at("matrix"), field);
    r.bezout_smith = polys_from(doc.at("bezout").at("smith"), field);
    for (const auto& je : doc.at("eigenvalues")) {
      EigenRecord e;
      e.y0 = scalar_from(je.at("y0"), field);
      for (const auto& jp : je.at("finite")) {
        e.finite.push_back({scalar_from(jp.at("x0"), field),
                            jp.at("dual_dim").get<int>(),
                            {jp.at("beta").get<int>(), jp.at("alpha").get<std::vector<int>>()}});
      }
      e.complete = je.at("complete").get<bool>();
      e.infinity = infinity_from(je.at("infinity"), e.y0);
      e.infinity_bezout = infinity_from(je.at("infinity_bezout"), e.y0);
      e.kappa_sylvester = je.at("kappa_sylvester").get<std::vector<int>>();
      e.kappa_bezout = je.at("kappa_bezout").get<std::vector<int>>();
      e.verdicts = verdicts_from(je.at("verdicts"));
      r.eigenvalues.push_back(std::move(e));
    }
    const Json& gl = doc.at("global");
    r.resultant = uni_from(gl.at("resultant"), field);
    r.res_degree = gl.at("res_degree").get<int>();
    r.det_sylvester_degree = gl.at("det_sylvester_degree").get<int>();
    r.det_bezout_degree = gl.at("det_bezout_degree").get<int>();
    r.sum_dual_dims = gl.at("sum_dual_dims").get<int>();
    r.sum_infinity_dims = gl.at("sum_infinity_dims").get<int>();
    r.moebius_sylvester = map_from(gl.at("moebius_sylvester"), field);
    r.moebius_bezout = map_from(gl.at("moebius_bezout"), field);
    r.verdicts = verdicts_from(gl.at("verdicts"));
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::SyntaxError, std::string("malformed report: ") + e.what());
  }
}

}  // namespace resmith
