// newton-incl - Newton's method for nonlinear inclusion problems over product cones
// Licensed under Apache 2.0

#include "newton_incl/json_io.hpp"

#include <cstdio>
#include <stdexcept>

namespace newton_incl {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw std::invalid_argument("problem JSON: " + path + ": " + what);
}

double require_real(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

long long require_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<long long>();
}

PolyExpr parse_expr(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty() || !j[0].is_string())
    fail(path, "expected [\"op\", ...] expression array");
  const std::string op = j[0].get<std::string>();
  const auto arity = [&](std::size_t n) {
    if (j.size() != n + 1)
      fail(path, "\"" + op + "\" takes " + std::to_string(n) + " argument(s)");
  };
  if (op == "const") {
    arity(1);
    return PolyExpr::constant(require_real(j[1], path + "/1"));
  }
  if (op == "var") {
    arity(1);
    const long long i = require_int(j[1], path + "/1");
    if (i < 0) fail(path + "/1", "variable index must be >= 0");
    return PolyExpr::variable(static_cast<int>(i));
  }
  if (op == "neg") {
    arity(1);
    return -parse_expr(j[1], path + "/1");
  }
  if (op == "add") {
    arity(2);
    return parse_expr(j[1], path + "/1") + parse_expr(j[2], path + "/2");
  }
  if (op == "mul") {
    arity(2);
    return parse_expr(j[1], path + "/1") * parse_expr(j[2], path + "/2");
  }
  if (op == "pow") {
    arity(2);
    const long long k = require_int(j[2], path + "/2");
    if (k < 0) fail(path + "/2", "exponent must be >= 0");
    return parse_expr(j[1], path + "/1").pow(static_cast<int>(k));
  }
  fail(path, "unknown operator \"" + op + "\"");
}

Eigen::VectorXd parse_vector(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of numbers");
  Eigen::VectorXd v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i)
    v[static_cast<Eigen::Index>(i)] = require_real(j[i], path + "/" + std::to_string(i));
  return v;
}

std::string fmt_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_expr(std::string& out, const PolyExpr& e) {
  switch (e.kind()) {
    case PolyExpr::Kind::constant:
      out += "[\"const\"," + fmt_real(e.constant_value()) + "]";
      return;
    case PolyExpr::Kind::variable:
      out += "[\"var\"," + std::to_string(e.variable_index()) + "]";
      return;
    case PolyExpr::Kind::add:
      out += "[\"add\",";
      write_expr(out, e.lhs());
      out += ",";
      write_expr(out, e.rhs());
      out += "]";
      return;
    case PolyExpr::Kind::negate:
      out += "[\"neg\",";
      write_expr(out, e.lhs());
      out += "]";
      return;
    case PolyExpr::Kind::multiply:
      out += "[\"mul\",";
      write_expr(out, e.lhs());
      out += ",";
      write_expr(out, e.rhs());
      out += "]";
      return;
    case PolyExpr::Kind::power:
      out += "[\"pow\",";
      write_expr(out, e.lhs());
      out += "," + std::to_string(e.exponent()) + "]";
      return;
  }
  throw std::logic_error("write_expr: corrupt node");
}

void write_vector(std::string& out, const Eigen::VectorXd& v) {
  out += "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += fmt_real(v[i]);
  }
  out += "]";
}

}  // namespace

InclusionProblem problem_from_json(const json& j) {
  if (!j.is_object()) fail("/", "expected an object");
  for (const auto& key : {"n", "cone", "F", "x_tilde", "R"})
    if (!j.contains(key)) fail("/", std::string("missing required field \"") + key + "\"");

  std::string name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) fail("/name", "expected a string");
    name = j["name"].get<std::string>();
  }
  const long long n = require_int(j["n"], "/n");
  if (n < 1) fail("/n", "must be >= 1");

  const json& jc = j["cone"];
  if (!jc.is_object()) fail("/cone", "expected {\"p\": int, \"q\": int}");
  for (const auto& key : {"p", "q"})
    if (!jc.contains(key)) fail("/cone", std::string("missing field \"") + key + "\"");
  const long long p = require_int(jc["p"], "/cone/p");
  const long long q = require_int(jc["q"], "/cone/q");
  if (p < 0) fail("/cone/p", "must be >= 0");
  if (q < 0) fail("/cone/q", "must be >= 0");
  if (p + q < 1) fail("/cone", "p + q must be >= 1");

  const json& jf = j["F"];
  if (!jf.is_array()) fail("/F", "expected an array of expressions");
  if (static_cast<long long>(jf.size()) != p + q)
    fail("/F", "has " + std::to_string(jf.size()) + " components but cone requires p + q = " +
                   std::to_string(p + q));
  std::vector<PolyExpr> components;
  components.reserve(jf.size());
  for (std::size_t i = 0; i < jf.size(); ++i)
    components.push_back(parse_expr(jf[i], "/F/" + std::to_string(i)));

  const Eigen::VectorXd x_tilde = parse_vector(j["x_tilde"], "/x_tilde");
  if (x_tilde.size() != n) fail("/x_tilde", "length must equal n");
  const double R = require_real(j["R"], "/R");
  if (!(R > 0.0)) fail("/R", "must be > 0");

  ExpectedValues expected;
  if (j.contains("expected")) {
    const json& je = j["expected"];
    if (!je.is_object()) fail("/expected", "expected an object");
    if (je.contains("L")) expected.lipschitz = require_real(je["L"], "/expected/L");
    if (je.contains("gamma")) expected.gamma = require_real(je["gamma"], "/expected/gamma");
    if (je.contains("b")) expected.b = require_real(je["b"], "/expected/b");
    if (je.contains("solution")) {
      Eigen::VectorXd sol = parse_vector(je["solution"], "/expected/solution");
      if (sol.size() != n) fail("/expected/solution", "length must equal n");
      expected.solution = std::move(sol);
    }
  }

  try {
    return InclusionProblem(std::move(name), static_cast<int>(n),
                            ProductCone(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(q)),
                            std::move(components), x_tilde, R, std::move(expected));
  } catch (const std::invalid_argument& e) {
    fail("/", e.what());
  }
}

InclusionProblem load_problem(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("problem JSON: not parseable: ") + e.what());
  }
  return problem_from_json(j);
}

std::string save_problem(const InclusionProblem& problem) {
  std::string out = "{\n";
  if (!problem.name().empty()) {
    out += "  \"name\": " + json(problem.name()).dump() + ",\n";
  }
  out += "  \"n\": " + std::to_string(problem.dim_in()) + ",\n";
  out += "  \"cone\": {\"p\": " + std::to_string(problem.cone().p) +
         ", \"q\": " + std::to_string(problem.cone().q) + "},\n";
  out += "  \"F\": [\n";
  for (std::size_t i = 0; i < problem.components().size(); ++i) {
    out += "    ";
    write_expr(out, problem.components()[i]);
    out += (i + 1 < problem.components().size()) ? ",\n" : "\n";
  }
  out += "  ],\n";
  out += "  \"x_tilde\": ";
  write_vector(out, problem.x_tilde());
  out += ",\n";
  out += "  \"R\": " + fmt_real(problem.radius());
  const ExpectedValues& e = problem.expected();
  if (!e.empty()) {
    out += ",\n  \"expected\": {";
    bool first = true;
    const auto field = [&](const char* key, const std::string& value) {
      if (!first) out += ", ";
      out += std::string("\"") + key + "\": " + value;
      first = false;
    };
    if (e.lipschitz) field("L", fmt_real(*e.lipschitz));
    if (e.gamma) field("gamma", fmt_real(*e.gamma));
    if (e.b) field("b", fmt_real(*e.b));
    if (e.solution) {
      std::string vec;
      write_vector(vec, *e.solution);
      field("solution", vec);
    }
    out += "}";
  }
  out += "\n}\n";
  return out;
}

ordered_json certificate_json(const Certificate& cert) {
  ordered_json j;
  j["family"] = cert.family == MajorantFamily::quadratic ? "quadratic" : "smale";
  ordered_json params;
  params[cert.family == MajorantFamily::quadratic ? "L" : "gamma"] = cert.coeff;
  params["b"] = cert.b;
  j["params"] = params;
  ordered_json prov;
  prov[cert.family == MajorantFamily::quadratic ? "L" : "gamma"] =
      to_string(cert.coeff_provenance);
  prov["b"] = to_string(cert.b_provenance);
  j["provenance"] = prov;
  j["hypothesis_ok"] = cert.hypothesis_ok;
  j["strict_ok"] = cert.strict_ok;
  j["t_star"] = cert.t_star;
  j["t_bar"] = cert.t_bar;
  j["beta"] = cert.beta;
  j["rho_max"] = cert.rho_max;
  j["Q"] = cert.rate_constant;
  j["empirical"] = cert.sampled();
  return j;
}

ordered_json trace_json(const SolveTrace& trace) {
  ordered_json j;
  auto iterates = ordered_json::array();
  for (const auto& x : trace.iterates) {
    auto row = ordered_json::array();
    for (Eigen::Index i = 0; i < x.size(); ++i) row.push_back(x[i]);
    iterates.push_back(std::move(row));
  }
  j["iterates"] = std::move(iterates);
  j["step_norms"] = trace.step_norms;
  j["residuals"] = trace.residuals;
  auto checks = ordered_json::array();
  for (const auto& rec : trace.bound_checks) {
    ordered_json row;
    row["t_gap"] = rec.t_gap;
    row["step_le_gap"] = rec.step_le_gap;
    row["quad_ratio_ok"] = rec.quad_ratio_ok;
    checks.push_back(std::move(row));
  }
  j["bound_checks"] = std::move(checks);
  j["status"] = to_string(trace.status);
  return j;
}

ordered_json verification_json(const VerificationReport& report) {
  ordered_json j;
  auto rows = ordered_json::array();
  const auto check = [](const InequalityCheck& c) {
    ordered_json r;
    r["lhs"] = c.lhs;
    r["rhs"] = c.rhs;
    r["ok"] = c.ok;
    return r;
  };
  for (const auto& s : report.steps) {
    ordered_json row;
    row["k"] = s.k;
    row["t_gap"] = s.t_gap;
    row["step_le_gap"] = check(s.step_le_gap);
    if (s.ratio_bound) row["ratio_bound"] = check(*s.ratio_bound);
    if (s.rate_bound) row["rate_bound"] = check(*s.rate_bound);
    rows.push_back(std::move(row));
  }
  j["steps"] = std::move(rows);
  auto limits = ordered_json::array();
  for (const auto& c : report.limit_bounds) limits.push_back(check(c));
  j["limit_bounds"] = std::move(limits);
  j["all_ok"] = report.all_ok;
  j["proxy_tolerance"] = report.proxy_tolerance;
  j["note"] = report.note;
  return j;
}

}  // namespace newton_incl
