#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "resmith/analyze.hpp"
#include "resmith/dual.hpp"
#include "resmith/error.hpp"
#include "resmith/golden.hpp"
#include "resmith/infinity.hpp"
#include "resmith/parser.hpp"
#include "resmith/report_json.hpp"
#include "resmith/resultant.hpp"
#include "resmith/roots.hpp"
#include "resmith/smith.hpp"

using namespace resmith;
using Json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kVerificationFailed = 1, kInputError = 2, kInconclusive = 3 };

struct Job {
  std::string command;
  std::string field = "Q";
  std::string f;
  std::string g;
  std::string grades;
  std::uint64_t seed = 0;
  std::string output = "text";
  std::string point;
  std::string order = "xy";
  std::string matrix = "sylvester";
  bool transforms = false;
  bool swap = false;
  bool golden = false;
};

// An input error tied to one of the command-line strings.
struct InputError {
  std::string label;
  std::string text;
  Error error;
};

BiPoly parse_operand(const std::string& label, const std::string& text, const Field& field) {
  if (text.empty()) throw InputError{label, text, Error(ErrorCode::SyntaxError, "missing polynomial " + label)};
  try {
    return parse_poly(text, field);
  } catch (const Error& e) {
    throw InputError{label, text, e};
  }
}

Scalar parse_scalar(const std::string& label, const std::string& text, const Field& field) {
  BiPoly p = parse_operand(label, text, field);
  if (!p.is_constant()) {
    throw InputError{label, text, Error(ErrorCode::SyntaxError, "expected a field element")};
  }
  return p.coeff(0, 0);
}

std::pair<std::string, std::string> split_pair(const std::string& label, const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos) {
    throw InputError{label, text, Error(ErrorCode::SyntaxError, "expected two comma-separated values")};
  }
  return {text.substr(0, comma), text.substr(comma + 1)};
}

std::optional<std::pair<int, int>> parse_grades(const std::string& text) {
  if (text.empty()) return std::nullopt;
  auto [a, b] = split_pair("--grades", text);
  try {
    std::size_t ua = 0, ub = 0;
    int m = std::stoi(a, &ua), n = std::stoi(b, &ub);
    if (ua != a.size() || ub != b.size()) throw std::invalid_argument("trailing");
    return std::pair{m, n};
  } catch (const std::exception&) {
    throw InputError{"--grades", text, Error(ErrorCode::SyntaxError, "grades must be two integers")};
  }
}

std::string row_text(const std::vector<std::string>& cells, const std::vector<std::size_t>& widths) {
  std::string out = "[";
  for (std::size_t j = 0; j < cells.size(); ++j) {
    out += "  " + std::string(widths[j] - cells[j].size(), ' ') + cells[j];
  }
  return out + "  ]";
}

void print_matrix(std::ostream& os, const PolyMatrix& m) {
  auto cells = m.to_strings();
  std::vector<std::size_t> widths(m.cols(), 1);
  for (const auto& row : cells) {
    for (std::size_t j = 0; j < row.size(); ++j) widths[j] = std::max(widths[j], row[j].size());
  }
  for (const auto& row : cells) os << row_text(row, widths) << "\n";
}

Json matrix_json(const PolyMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m.to_strings()) rows.push_back(row);
  return rows;
}

template <class T>
std::string list(const std::vector<T>& xs) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << ", ";
    if constexpr (std::is_same_v<T, UniPoly>) {
      os << xs[i].to_string();
    } else {
      os << xs[i];
    }
  }
  os << "]";
  return os.str();
}

Json polys_json(const std::vector<UniPoly>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

struct Inputs {
  Field field;
  BiPoly f;
  BiPoly g;
  std::optional<std::pair<int, int>> grades;
};

Inputs load_inputs(const Job& job) {
  Field field;
  try {
    field = Field::parse(job.field);
  } catch (const Error& e) {
    throw InputError{"--field", job.field, e};
  }
  return {field, parse_operand("-f", job.f, field), parse_operand("-g", job.g, field), parse_grades(job.grades)};
}

SylvesterSpec spec_of(const Inputs& in) {
  SylvesterSpec spec = SylvesterSpec::natural(in.f, in.g);
  if (in.grades) {
    spec.m = in.grades->first;
    spec.n = in.grades->second;
  }
  spec.validate();
  return spec;
}

int cmd_matrix(const Job& job, bool bezout) {
  Inputs in = load_inputs(job);
  PolyMatrix m = bezout ? bezout_matrix(in.f, in.g) : sylvester_matrix(spec_of(in));
  if (job.output == "json") {
    std::cout << Json{{"matrix", matrix_json(m)}}.dump(2) << "\n";
  } else {
    print_matrix(std::cout, m);
  }
  return kOk;
}

int cmd_smith(const Job& job) {
  Inputs in = load_inputs(job);
  if (job.matrix != "sylvester" && job.matrix != "bezout") {
    throw InputError{"--matrix", job.matrix, Error(ErrorCode::SyntaxError, "expected sylvester or bezout")};
  }
  PolyMatrix m = job.matrix == "bezout" ? bezout_matrix(in.f, in.g) : sylvester_matrix(spec_of(in));
  SmithForm sf = smith_form(m, job.transforms);
  bool consistent = true;
  if (job.transforms) consistent = *sf.U * m * *sf.V == sf.diagonal(m.rows(), m.cols());
  if (job.output == "json") {
    Json out{{"matrix", job.matrix}, {"smith", polys_json(sf.invariant_factors)}};
    if (job.transforms) {
      out["U"] = matrix_json(*sf.U);
      out["V"] = matrix_json(*sf.V);
      out["UMV_equals_D"] = consistent;
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "invariant factors: " << list(sf.invariant_factors) << "\n";
    if (job.transforms) {
      std::cout << "U:\n";
      print_matrix(std::cout, *sf.U);
      std::cout << "V:\n";
      print_matrix(std::cout, *sf.V);
      std::cout << "U M V == D: " << (consistent ? "yes" : "no") << "\n";
    }
  }
  return consistent ? kOk : kVerificationFailed;
}

int cmd_dual(const Job& job) {
  Inputs in = load_inputs(job);
  if (job.point.empty()) {
    throw InputError{"--point", job.point, Error(ErrorCode::SyntaxError, "dual needs --point x0,y0")};
  }
  auto [xs, ys] = split_pair("--point", job.point);
  Scalar x0 = parse_scalar("--point", xs, in.field), y0 = parse_scalar("--point", ys, in.field);
  if (job.order != "xy" && job.order != "yx") {
    throw InputError{"--order", job.order, Error(ErrorCode::SyntaxError, "expected xy or yx")};
  }
  LexOrder order = job.order == "xy" ? LexOrder::XLessY : LexOrder::YLessX;
  DualSpace v = dual_space(in.f, in.g, x0, y0);
  GaussBasis gb = gauss_basis(v, order);
  MoellerIndices mi = moeller_indices(gb);
  auto lead = leading_vectors(gb, mi);
  std::vector<std::string> basis, leading;
  for (const auto& e : gb.elements) basis.push_back(e.to_string());
  for (const auto& e : lead) leading.push_back(e.to_string());
  const char* wrt = order == LexOrder::XLessY ? "y" : "x";
  if (job.output == "json") {
    Json out{{"point", {x0.to_string(), y0.to_string()}},
             {"order", job.order},
             {"dimension", v.dim()},
             {"gauss_basis", basis},
             {"with_respect_to", wrt},
             {"beta", mi.beta},
             {"alpha", mi.alpha},
             {"leading_vectors", leading}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "point (" << x0.to_string() << ", " << y0.to_string() << "), lex order "
              << (order == LexOrder::XLessY ? "x < y" : "y < x") << "\n";
    std::cout << "dimension " << v.dim() << "\n";
    std::cout << "Gauss basis:\n";
    for (const auto& b : basis) std::cout << "  " << b << "\n";
    std::cout << "Moeller indices with respect to " << wrt << ": beta = " << mi.beta << ", alpha = "
              << list(mi.alpha) << "\n";
    std::cout << "leading vectors:\n";
    for (std::size_t i = 0; i < leading.size(); ++i) std::cout << "  phi_" << i << " = " << leading[i] << "\n";
  }
  return kOk;
}

int cmd_moller(const Job& job) {
  Inputs in = load_inputs(job);
  SylvesterSpec spec = spec_of(in);
  if (!coprime(in.f, in.g)) throw Error(ErrorCode::NotZeroDimensional, "f and g share a nonconstant factor");
  UniPoly det = sylvester_matrix(spec).det();
  Json points = Json::array(), infinity = Json::array();
  std::ostringstream text;
  bool complete = true;
  int found_y = 0;
  for (const auto& root : rational_roots(det)) {
    found_y += root.multiplicity;
    const Scalar& y0 = root.value;
    UniPoly h = gcd(eval_y(in.f, y0), eval_y(in.g, y0));
    if (h.degree() > 0) {
      int found_x = 0;
      for (const auto& r : rational_roots(h)) {
        found_x += r.multiplicity;
        DualSpace v = dual_space(in.f, in.g, r.value, y0);
        MoellerIndices mi = moeller_indices(gauss_basis(v, LexOrder::XLessY));
        points.push_back({{"x0", r.value.to_string()},
                          {"y0", y0.to_string()},
                          {"dual_dim", v.dim()},
                          {"beta", mi.beta},
                          {"alpha", mi.alpha}});
        text << "(" << r.value.to_string() << ", " << y0.to_string() << "): dim " << v.dim() << ", beta "
             << mi.beta << ", alpha " << list(mi.alpha) << "\n";
      }
      complete = complete && found_x == h.degree();
    }
    InfinityReport inf = infinity_at(in.f, in.g, {spec.m, spec.n}, y0);
    if (inf.is_infinite_intersection) {
      infinity.push_back({{"y0", y0.to_string()},
                          {"multiplicity", inf.multiplicity},
                          {"beta", inf.indices.beta},
                          {"alpha", inf.indices.alpha}});
      text << "(inf, " << y0.to_string() << "): dim " << inf.multiplicity << ", beta " << inf.indices.beta
           << ", alpha " << list(inf.indices.alpha) << "\n";
    }
  }
  complete = complete && found_y == det.degree();
  if (job.output == "json") {
    std::cout << Json{{"points", points}, {"infinity", infinity}, {"complete", complete}}.dump(2) << "\n";
  } else {
    std::cout << text.str();
    if (!complete) std::cout << "some intersections lie outside " << in.field.name() << "\n";
  }
  return complete ? kOk : kInconclusive;
}

void print_report(std::ostream& os, const AnalysisReport& r) {
  os << "field " << r.input.field.name() << "\n";
  os << "f = " << r.input.f.to_string() << "\n";
  os << "g = " << r.input.g.to_string() << "\n";
  if (r.input.swapped) os << "(x and y exchanged)\n";
  os << "grades (" << r.input.m << ", " << r.input.n << ")\n";
  os << "Smith form of S: " << list(r.sylvester_smith) << "\n";
  os << "Smith form of B: " << list(r.bezout_smith) << "\n";
  os << "resultant: " << r.resultant.to_string() << " (degree " << r.res_degree << ")\n";
  for (const auto& e : r.eigenvalues) {
    os << "eigenvalue " << e.y0.to_string() << "\n";
    for (const auto& p : e.finite) {
      os << "  x0 = " << p.x0.to_string() << ": dim " << p.dual_dim << ", beta " << p.indices.beta << ", alpha "
         << list(p.indices.alpha) << "\n";
    }
    if (!e.complete) os << "  further x-roots outside " << r.input.field.name() << "\n";
    if (e.infinity) {
      os << "  infinity: dim " << e.infinity->multiplicity << ", beta " << e.infinity->indices.beta << ", alpha "
         << list(e.infinity->indices.alpha) << "\n";
    }
    if (e.infinity_bezout) {
      os << "  infinity at grade k: dim " << e.infinity_bezout->multiplicity << ", beta "
         << e.infinity_bezout->indices.beta << ", alpha " << list(e.infinity_bezout->indices.alpha) << "\n";
    }
    os << "  kappa S " << list(e.kappa_sylvester) << ", kappa B " << list(e.kappa_bezout) << "\n";
    os << " ";
    for (const auto& [name, v] : e.verdicts) os << " " << name << " " << to_string(v);
    os << "\n";
  }
  os << "global:";
  for (const auto& [name, v] : r.verdicts) os << " " << name << " " << to_string(v);
  os << "\noverall: " << to_string(r.overall()) << "\n";
}

int cmd_analyze(const Job& job) {
  Inputs in = load_inputs(job);
  AnalyzeOptions opt;
  opt.grades = in.grades;
  opt.seed = job.seed;
  AnalysisReport r = job.swap ? swap_variables_analyze(in.f, in.g, opt) : analyze(in.f, in.g, opt);
  if (job.output == "json") {
    std::cout << report_to_json(r);
  } else {
    print_report(std::cout, r);
  }
  switch (r.overall()) {
    case Verdict::Pass:
      return kOk;
    case Verdict::Fail:
      return kVerificationFailed;
    case Verdict::Inconclusive:
      return kInconclusive;
  }
  return kVerificationFailed;
}

int cmd_verify(const Job& job) {
  if (!job.golden) {
    throw InputError{"verify", "", Error(ErrorCode::SyntaxError, "verify needs --golden")};
  }
  auto results = run_golden_checks();
  bool ok = true;
  Json out = Json::array();
  for (const auto& r : results) {
    ok = ok && r.passed;
    if (job.output == "json") {
      out.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    } else {
      std::cout << (r.passed ? "pass  " : "FAIL  ") << r.name << "\n";
      if (!r.passed) std::cout << "      got " << r.detail << "\n";
    }
  }
  if (job.output == "json") std::cout << out.dump(2) << "\n";
  return ok ? kOk : kVerificationFailed;
}

void apply_job_file(const std::string& path, Job& job, const CLI::App& app) {
  std::ifstream in(path);
  if (!in) throw InputError{"--job", path, Error(ErrorCode::SyntaxError, "cannot read job file")};
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError{"--job", path, Error(ErrorCode::SyntaxError, std::string("job file: ") + e.what())};
  }
  if (!doc.is_object()) throw InputError{"--job", path, Error(ErrorCode::SyntaxError, "job file must be an object")};
  // Flags given on the command line win over the file.
  auto given = [&](const char* name) {
    for (const CLI::App* a : app.get_subcommands()) {
      if (a->count(name) > 0) return true;
    }
    return app.count(name) > 0;
  };
  try {
    if (doc.contains("command") && job.command.empty()) job.command = doc["command"].get<std::string>();
    if (doc.contains("field") && !given("--field")) job.field = doc["field"].get<std::string>();
    if (doc.contains("f") && !given("-f")) job.f = doc["f"].get<std::string>();
    if (doc.contains("g") && !given("-g")) job.g = doc["g"].get<std::string>();
    if (doc.contains("grades") && !given("--grades")) {
      job.grades = std::to_string(doc["grades"].at(0).get<int>()) + "," + std::to_string(doc["grades"].at(1).get<int>());
    }
    if (doc.contains("seed") && !given("--seed")) job.seed = doc["seed"].get<std::uint64_t>();
    if (doc.contains("output") && !given("--output")) job.output = doc["output"].get<std::string>();
    if (doc.contains("point") && !given("--point")) job.point = doc["point"].get<std::string>();
    if (doc.contains("order") && !given("--order")) job.order = doc["order"].get<std::string>();
    if (doc.contains("matrix") && !given("--matrix")) job.matrix = doc["matrix"].get<std::string>();
    if (doc.contains("transforms") && !given("--transforms")) job.transforms = doc["transforms"].get<bool>();
    if (doc.contains("swap") && !given("--swap")) job.swap = doc["swap"].get<bool>();
    if (doc.contains("golden") && !given("--golden")) job.golden = doc["golden"].get<bool>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError{"--job", path, Error(ErrorCode::SyntaxError, std::string("job file: ") + e.what())};
  }
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::IncompleteVariety:
    case ErrorCode::ExtensionFieldRoots:
      return kInconclusive;
    case ErrorCode::InternalInconsistency:
      return kVerificationFailed;
    default:
      return kInputError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  Job job;
  if (const char* env = std::getenv("RESULTANT_SMITH_SEED")) {
    try {
      job.seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: RESULTANT_SMITH_SEED must be a non-negative integer\n";
      return kInputError;
    }
  }

  CLI::App app{"Resultant matrices, Smith forms and Moeller indices of bivariate polynomial pairs"};
  app.fallthrough();
  app.require_subcommand(0, 1);
  std::string job_file;
  app.add_option("--job", job_file, "JSON job file; command-line flags take precedence");
  app.add_option("--field", job.field, "Q or Fp:<prime>");
  app.add_option("-f", job.f, "first polynomial");
  app.add_option("-g", job.g, "second polynomial");
  app.add_option("--grades", job.grades, "Sylvester grades m,n");
  app.add_option("--seed", job.seed, "seed for the Moebius map (default $RESULTANT_SMITH_SEED or 0)");
  app.add_option("--output", job.output, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* sylv = app.add_subcommand("sylvester", "print S(y)");
  auto* bez = app.add_subcommand("bezout", "print B(y)");
  auto* smith = app.add_subcommand("smith", "Smith form of S(y) or B(y)");
  smith->add_option("--matrix", job.matrix, "sylvester or bezout");
  smith->add_flag("--transforms", job.transforms, "also print U, V with U M V = D");
  auto* dual = app.add_subcommand("dual", "Gauss basis and Moeller indices at a point");
  dual->add_option("--point", job.point, "x0,y0");
  dual->add_option("--order", job.order, "xy (x < y, indices with respect to y) or yx");
  auto* moller = app.add_subcommand("moller", "Moeller indices at every base-field intersection");
  auto* an = app.add_subcommand("analyze", "full analysis with verdicts");
  an->add_flag("--swap", job.swap, "exchange x and y first");
  auto* verify = app.add_subcommand("verify", "run the embedded worked examples");
  verify->add_flag("--golden", job.golden, "check the published values");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  for (auto* sub : {sylv, bez, smith, dual, moller, an, verify}) {
    if (sub->parsed()) job.command = sub->get_name();
  }

  try {
    if (!job_file.empty()) apply_job_file(job_file, job, app);
    if (job.output != "text" && job.output != "json") {
      throw InputError{"--output", job.output, Error(ErrorCode::SyntaxError, "expected text or json")};
    }
    if (job.command == "sylvester") return cmd_matrix(job, false);
    if (job.command == "bezout") return cmd_matrix(job, true);
    if (job.command == "smith") return cmd_smith(job);
    if (job.command == "dual") return cmd_dual(job);
    if (job.command == "moller") return cmd_moller(job);
    if (job.command == "analyze") return cmd_analyze(job);
    if (job.command == "verify") return cmd_verify(job);
    std::cerr << "error: no command given\n" << app.help();
    return kInputError;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.error.what() << "\n";
    if (e.error.position()) {
      std::cerr << "  " << e.label << " " << e.text << "\n";
      std::cerr << "  " << std::string(e.label.size() + *e.error.position(), ' ') << "^\n";
    }
    return kInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
}
