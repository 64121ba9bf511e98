// newton-incl - Newton's method for nonlinear inclusion problems over product cones
// Licensed under Apache 2.0

#include "newton_incl/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <limits>
#include <fstream>
#include <ostream>
#include <sstream>

#include "newton_incl/catalog.hpp"
#include "newton_incl/certify.hpp"
#include "newton_incl/json_io.hpp"
#include "newton_incl/rng.hpp"
#include "newton_incl/solver.hpp"

namespace newton_incl {

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 1;
constexpr int kExitMaxIter = 2;
constexpr int kExitStepFailure = 3;
constexpr int kExitRhoRange = 4;
constexpr int kExitVerifyFailed = 5;

// 12-significant-digit scientific formatting for all table output.
std::string sci(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.11e", v);
  return buf;
}

std::string cell(double v) {
  std::string s = sci(v);
  while (s.size() < 20) s += ' ';
  return s;
}

// Flag values may be rationals like "1/3"; parsed exactly then divided.
double parse_real(const std::string& s) {
  const auto bad = [&s]() {
    throw std::invalid_argument("not a real number or rational: \"" + s + "\"");
  };
  const auto to_double = [&](const std::string& part) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(part, &pos);
    } catch (const std::exception&) {
      bad();
    }
    if (pos != part.size()) bad();
    return v;
  };
  const auto slash = s.find('/');
  if (slash == std::string::npos) return to_double(s);
  const double num = to_double(s.substr(0, slash));
  const double den = to_double(s.substr(slash + 1));
  if (den == 0.0) throw std::invalid_argument("zero denominator in \"" + s + "\"");
  return num / den;
}

Eigen::VectorXd parse_csv_vector(const std::string& s) {
  std::vector<double> vals;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) vals.push_back(parse_real(item));
  Eigen::VectorXd v(static_cast<Eigen::Index>(vals.size()));
  for (std::size_t i = 0; i < vals.size(); ++i) v[static_cast<Eigen::Index>(i)] = vals[i];
  return v;
}

std::uint64_t default_seed() {
  const char* env = std::getenv("NEWTON_INCL_SEED");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  const std::uint64_t v = std::strtoull(env, &end, 10);
  if (end == nullptr || *end != '\0')
    throw std::invalid_argument("NEWTON_INCL_SEED is not an unsigned integer");
  return v;
}

InclusionProblem load_source(const std::string& source) {
  if (std::filesystem::exists(source)) {
    std::ifstream in(source);
    if (!in) throw std::invalid_argument("cannot open problem file: " + source);
    std::stringstream buf;
    buf << in.rdbuf();
    return load_problem(buf.str());
  }
  return catalog_problem(source);
}

void emit_json(const ordered_json& j, const std::string& path, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::invalid_argument("cannot open output file: " + path);
  f << text;
}

int exit_code_for(SolveStatus s) {
  switch (s) {
    case SolveStatus::converged_residual:
    case SolveStatus::converged_step: return kExitOk;
    case SolveStatus::max_iter: return kExitMaxIter;
    case SolveStatus::step_failure: return kExitStepFailure;
  }
  return kExitMaxIter;
}

struct CertOptions {
  std::string family;
  std::string coeff_flag;  // numeric/rational literal, "estimate", or "exact"
  int samples{1000};
  std::uint64_t seed{0};
};

Certificate resolve_certificate(const InclusionProblem& prob, const CertOptions& opt, double b,
                                ordered_json* sampling_info) {
  const bool quad = opt.family == "quadratic";
  double coeff = 0.0;
  ParamProvenance prov = ParamProvenance::user_supplied;
  if (opt.coeff_flag == "estimate") {
    const SampledEstimate est = quad ? estimate_L(prob, opt.samples, opt.seed)
                                     : estimate_gamma(prob, opt.samples, opt.seed);
    coeff = est.value;
    prov = ParamProvenance::sampled_estimate;
    if (sampling_info != nullptr) {
      (*sampling_info)["n_samples"] = est.n_samples;
      (*sampling_info)["seed"] = est.seed;
    }
  } else if (opt.coeff_flag == "exact") {
    const auto& exp = prob.expected();
    const auto& stored = quad ? exp.lipschitz : exp.gamma;
    if (!stored)
      throw std::invalid_argument("problem \"" + prob.name() + "\" carries no exact " +
                                  (quad ? "L" : "gamma"));
    coeff = *stored;
    prov = ParamProvenance::exact;
  } else {
    coeff = parse_real(opt.coeff_flag);
  }
  return quad ? kantorovich_certificate(coeff, b, prov) : smale_certificate(coeff, b, prov);
}

void print_certificate(std::ostream& out, const Certificate& cert) {
  const bool quad = cert.family == MajorantFamily::quadratic;
  out << "family: " << (quad ? "quadratic" : "smale") << "\n";
  out << (quad ? "L      = " : "gamma  = ") << sci(cert.coeff) << "  ["
      << to_string(cert.coeff_provenance) << "]\n";
  out << "b      = " << sci(cert.b) << "  [" << to_string(cert.b_provenance) << "]\n";
  const double h = quad ? 2.0 * cert.b * cert.coeff : cert.b * cert.coeff;
  out << (quad ? "2bL    = " : "alpha  = ") << sci(h) << "  (bound "
      << (quad ? "1" : "3-2*sqrt(2) = 1.71572875254e-01") << ")\n";
  out << "hypothesis: " << (cert.hypothesis_ok ? "OK" : "FAIL")
      << (cert.strict_ok ? " (strict)" : cert.hypothesis_ok ? " (boundary, not strict)" : "")
      << "\n";
  if (cert.hypothesis_ok) {
    out << "t_star   = " << sci(cert.t_star) << "\n";
    out << "t_bar    = " << sci(cert.t_bar) << "\n";
    out << "beta     = " << sci(cert.beta) << "\n";
    out << "rho_max  = " << sci(cert.rho_max) << "\n";
    out << "Q        = " << (cert.strict_ok ? sci(cert.rate_constant) : "undefined (boundary)")
        << "\n";
  }
  if (cert.sampled())
    out << "basis: empirical (sampled lower-bound parameter; violations possible)\n";
  else if (cert.hypothesis_ok)
    out << "basis: guaranteed for the supplied parameters\n";
}

// ---------------------------------------------------------------- solve ----

struct SolveArgs {
  std::string source;
  std::string x0_csv;
  int max_iter{50};
  double residual_tol{1e-10};
  double step_tol{1e-12};
  std::string json_path;
};

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  const InclusionProblem prob = load_source(a.source);
  Eigen::VectorXd x0 = prob.x_tilde();
  if (!a.x0_csv.empty()) {
    x0 = parse_csv_vector(a.x0_csv);
    if (x0.size() != prob.dim_in())
      throw std::invalid_argument("--x0 has " + std::to_string(x0.size()) +
                                  " entries, problem has n = " + std::to_string(prob.dim_in()));
  }
  SolveConfig cfg;
  cfg.max_iter = a.max_iter;
  cfg.residual_tol = a.residual_tol;
  cfg.step_tol = a.step_tol;

  const auto t0 = std::chrono::steady_clock::now();
  const SolveTrace trace = newton_solve(prob, x0, cfg);
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

  if (!trace.start_in_domain)
    err << "warning: x0 lies outside the declared ball B(x_tilde, R)\n";

  out << "problem: " << prob.name() << "  (n=" << prob.dim_in() << ", p=" << prob.cone().p
      << ", q=" << prob.cone().q << ")\n";
  out << "  k  ||step||              residual\n";
  for (std::size_t k = 0; k < trace.residuals.size(); ++k) {
    out << std::string(k < 10 ? "  " : " ") << k << "  ";
    out << (k == 0 ? std::string(20, ' ') : cell(trace.step_norms[k - 1])) << "  ";
    out << sci(trace.residuals[k]) << "\n";
  }
  out << "status: " << to_string(trace.status) << " after " << trace.steps() << " step(s)";
  if (!trace.diagnostic.empty()) out << "  [" << trace.diagnostic << "]";
  out << "\n";

  if (!a.json_path.empty()) {
    ordered_json j;
    j["schema_version"] = 1;
    j["problem"] = prob.name();
    j["trace"] = trace_json(trace);
    j["timing_ms"] = ms;
    emit_json(j, a.json_path, out);
  }
  return exit_code_for(trace.status);
}

// -------------------------------------------------------------- certify ----

struct CertifyArgs {
  std::string source;
  CertOptions cert;
  std::string rho_flag;
  std::string json_path;
};

int cmd_certify(const CertifyArgs& a, std::ostream& out, std::ostream& err) {
  const InclusionProblem prob = load_source(a.source);
  double b = 0.0;
  try {
    b = compute_b(prob);
  } catch (const InfeasibleSubproblem& e) {
    err << "error: " << e.what() << "\n";
    return kExitStepFailure;
  }
  ordered_json sampling;
  const auto t0 = std::chrono::steady_clock::now();
  const Certificate cert = resolve_certificate(prob, a.cert, b, &sampling);
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

  out << "problem: " << prob.name() << "\n";
  print_certificate(out, cert);

  ordered_json j;
  j["schema_version"] = 1;
  j["problem"] = prob.name();
  j["certificate"] = certificate_json(cert);
  if (!sampling.empty()) j["sampling"] = sampling;
  j["timing_ms"] = ms;

  if (!a.rho_flag.empty()) {
    const double rho = parse_real(a.rho_flag);
    if (!cert.strict_ok || !(rho >= 0.0) || rho >= cert.rho_max) {
      err << "error: rho = " << sci(rho) << " not admissible; require 0 <= rho < rho_max = "
          << sci(cert.strict_ok ? cert.rho_max : 0.0) << "\n";
      return kExitRhoRange;
    }
    const RobustnessBall ball = robustness_ball(cert, rho);
    out << "rho        = " << sci(rho) << "\n";
    out << "t_star_rho = " << sci(ball.t_star_rho) << "\n";
    out << "Q_rho      = " << sci(ball.rate_constant_rho) << "\n";
    if (std::isfinite(ball.t_star_rho_variant) &&
        std::abs(ball.t_star_rho_variant - ball.t_star_rho) > 1e-10)
      out << "note: sign-variant closed form gives " << sci(ball.t_star_rho_variant)
          << "; the bisection root above is authoritative\n";
    ordered_json rj;
    rj["rho"] = rho;
    rj["t_star_rho"] = ball.t_star_rho;
    rj["Q_rho"] = ball.rate_constant_rho;
    rj["t_star_rho_variant"] = ball.t_star_rho_variant;
    j["robustness"] = rj;
  }

  if (!a.json_path.empty()) emit_json(j, a.json_path, out);
  return kExitOk;
}

// --------------------------------------------------------------- verify ----

struct VerifyArgs {
  std::string source;
  CertOptions cert;
  std::string rho_flag;
  int perturb{0};
  int max_iter{50};
  double residual_tol{1e-10};
  std::string json_path;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const InclusionProblem prob = load_source(a.source);
  double b = 0.0;
  try {
    b = compute_b(prob);
  } catch (const InfeasibleSubproblem& e) {
    err << "error: " << e.what() << "\n";
    return kExitStepFailure;
  }
  ordered_json sampling;
  const Certificate cert = resolve_certificate(prob, a.cert, b, &sampling);

  out << "problem: " << prob.name() << "\n";
  print_certificate(out, cert);

  ordered_json j;
  j["schema_version"] = 1;
  j["problem"] = prob.name();
  j["certificate"] = certificate_json(cert);

  if (!cert.hypothesis_ok) {
    out << "verdict: FAIL (certificate hypothesis does not hold; no bounds to check)\n";
    if (!a.json_path.empty()) {
      j["all_ok"] = false;
      emit_json(j, a.json_path, out);
    }
    return kExitVerifyFailed;
  }

  SolveConfig cfg;
  cfg.max_iter = a.max_iter;
  cfg.residual_tol = a.residual_tol;
  cfg.record_bounds = true;

  const auto t0 = std::chrono::steady_clock::now();
  const MajorantTrace mtrace = majorant_sequence(cert.spec());
  SolveTrace trace = newton_solve(prob, prob.x_tilde(), cfg);
  if (trace.status == SolveStatus::step_failure || trace.status == SolveStatus::max_iter) {
    err << "error: base solve did not converge: " << to_string(trace.status) << "\n";
    return exit_code_for(trace.status);
  }
  const double rate = cert.strict_ok ? cert.rate_constant
                                     : std::numeric_limits<double>::quiet_NaN();
  const VerificationReport base = verify_majorant_bounds(trace, mtrace, rate);
  if (cfg.record_bounds) attach_bound_checks(trace, base);

  double max_dist = 0.0;
  for (const auto& x : trace.iterates)
    max_dist = std::max(max_dist, (x - prob.x_tilde()).norm());
  const bool base_contained = max_dist <= cert.t_star + 1e-9;

  bool all_ok = base.all_ok && base_contained;

  out << "base run from x_tilde: " << trace.steps() << " step(s), "
      << to_string(trace.status) << "\n";
  out << "  k  ||step||              t-gap                 step<=gap  ratio  rate\n";
  for (const auto& row : base.steps) {
    out << std::string(row.k < 10 ? "  " : " ") << row.k << "  "
        << cell(row.step_le_gap.lhs) << "  " << cell(row.t_gap) << "  "
        << (row.step_le_gap.ok ? "ok       " : "VIOLATION") << "  "
        << (row.ratio_bound ? (row.ratio_bound->ok ? "ok   " : "VIOL ") : "-    ") << "  "
        << (row.rate_bound ? (row.rate_bound->ok ? "ok" : "VIOL") : "-") << "\n";
  }
  bool limits_ok = true;
  for (const auto& c : base.limit_bounds) limits_ok = limits_ok && c.ok;
  out << "limit bounds (x* ~ final iterate): " << (limits_ok ? "ok" : "VIOLATION") << "\n";
  out << "containment: max ||x_k - x_tilde|| = " << sci(max_dist) << " vs t_star = "
      << sci(cert.t_star) << " : " << (base_contained ? "ok" : "VIOLATION") << "\n";

  ordered_json base_j;
  base_j["trace"] = trace_json(trace);
  base_j["checks"] = verification_json(base);
  base_j["containment_ok"] = base_contained;
  j["base_run"] = base_j;

  if (a.perturb > 0) {
    if (a.rho_flag.empty())
      throw std::invalid_argument("--perturb requires --rho");
    const double rho = parse_real(a.rho_flag);
    if (!cert.strict_ok || !(rho >= 0.0) || rho >= cert.rho_max) {
      err << "error: rho = " << sci(rho) << " not admissible; require 0 <= rho < rho_max = "
          << sci(cert.strict_ok ? cert.rho_max : 0.0) << "\n";
      return kExitRhoRange;
    }
    const RobustnessBall ball = robustness_ball(cert, rho);
    const MajorantTrace gtrace = majorant_sequence(ball.g);
    out << "perturbed sweep: rho = " << sci(rho) << ", t_star_rho = " << sci(ball.t_star_rho)
        << ", Q_rho = " << sci(ball.rate_constant_rho) << ", runs = " << a.perturb << "\n";
    out << "  i  ||xhat-x_tilde||     steps  status              bounds  containment\n";

    ordered_json runs = ordered_json::array();
    for (int i = 0; i < a.perturb; ++i) {
      SampleRng rng(a.cert.seed, 0x70657274ULL + static_cast<std::uint64_t>(i));
      const Eigen::VectorXd xhat = rng.in_ball(prob.x_tilde(), rho);
      SolveTrace pt = newton_solve(prob, xhat, cfg);
      if (pt.status == SolveStatus::step_failure || pt.status == SolveStatus::max_iter) {
        err << "error: perturbed run " << i << " did not converge: " << to_string(pt.status)
            << "\n";
        return exit_code_for(pt.status);
      }
      const VerificationReport rep = verify_majorant_bounds(pt, gtrace, ball.rate_constant_rho);
      double pdist = 0.0;
      for (const auto& x : pt.iterates) pdist = std::max(pdist, (x - prob.x_tilde()).norm());
      const bool contained = pdist <= ball.t_star_rho + 1e-9;
      all_ok = all_ok && rep.all_ok && contained;

      out << std::string(i < 10 ? "  " : " ") << i << "  "
          << cell((xhat - prob.x_tilde()).norm()) << "  " << pt.steps() << "      "
          << to_string(pt.status) << "  " << (rep.all_ok ? "ok    " : "VIOL  ") << "  "
          << (contained ? "ok" : "VIOL") << "\n";

      ordered_json run;
      run["i"] = i;
      run["start_distance"] = (xhat - prob.x_tilde()).norm();
      run["steps"] = pt.steps();
      run["status"] = to_string(pt.status);
      run["bounds_ok"] = rep.all_ok;
      run["containment_ok"] = contained;
      runs.push_back(std::move(run));
    }
    ordered_json pj;
    pj["rho"] = rho;
    pj["t_star_rho"] = ball.t_star_rho;
    pj["Q_rho"] = ball.rate_constant_rho;
    pj["runs"] = std::move(runs);
    j["perturbed"] = pj;
  }

  out << "verdict: " << (all_ok ? "ALL BOUNDS HOLD" : "VIOLATIONS FOUND") << "\n";
  j["all_ok"] = all_ok;
  j["timing_ms"] =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  if (!a.json_path.empty()) emit_json(j, a.json_path, out);
  return all_ok ? kExitOk : kExitVerifyFailed;
}

// -------------------------------------------------------------- catalog ----

int cmd_catalog(const std::string& json_path, std::ostream& out) {
  const auto problems = catalog();
  ordered_json list = ordered_json::array();
  out << "name         n  p  q  degree\n";
  for (const auto& p : problems) {
    out << p.name() << std::string(p.name().size() < 12 ? 12 - p.name().size() : 1, ' ')
        << " " << p.dim_in() << "  " << p.cone().p << "  " << p.cone().q << "  " << p.degree()
        << "\n";
    ordered_json row;
    row["name"] = p.name();
    row["n"] = p.dim_in();
    row["p"] = static_cast<int>(p.cone().p);
    row["q"] = static_cast<int>(p.cone().q);
    row["degree"] = p.degree();
    list.push_back(std::move(row));
  }
  if (!json_path.empty()) {
    ordered_json j;
    j["schema_version"] = 1;
    j["problems"] = std::move(list);
    emit_json(j, json_path, out);
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Newton solver and semi-local convergence certificates for polynomial "
               "inclusion problems F(x) in R^p_- x {0}^q"};
  app.require_subcommand(1);
  app.fallthrough();  // --seed may appear after the subcommand

  std::string seed_flag;

  SolveArgs sa;
  auto* solve = app.add_subcommand("solve", "run the Newton iteration");
  solve->add_option("problem", sa.source, "catalog name or problem JSON path")->required();
  solve->add_option("--x0", sa.x0_csv, "starting point as comma-separated reals");
  solve->add_option("--max-iter", sa.max_iter, "iteration limit");
  solve->add_option("--tol", sa.residual_tol, "residual tolerance");
  solve->add_option("--step-tol", sa.step_tol, "step-norm tolerance");
  solve->add_option("--json", sa.json_path, "write the report as JSON (- for stdout)");

  CertifyArgs ca;
  auto* certify = app.add_subcommand("certify", "build a convergence certificate");
  certify->add_option("problem", ca.source, "catalog name or problem JSON path")->required();
  certify->add_option("--family", ca.cert.family, "certificate family")
      ->required()
      ->check(CLI::IsMember({"quadratic", "smale"}));
  certify->add_option("--L", ca.cert.coeff_flag,
                      "Lipschitz constant: value, \"estimate\", or \"exact\"");
  std::string certify_gamma;
  certify->add_option("--gamma", certify_gamma,
                      "analytic gamma: value, \"estimate\", or \"exact\"");
  certify->add_option("--samples", ca.cert.samples, "sample count for estimates");
  certify->add_option("--rho", ca.rho_flag, "also build the perturbation data for this rho");
  certify->add_option("--json", ca.json_path, "write the report as JSON (- for stdout)");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "check the certified bounds on real runs");
  verify->add_option("problem", va.source, "catalog name or problem JSON path")->required();
  verify->add_option("--family", va.cert.family, "certificate family")
      ->required()
      ->check(CLI::IsMember({"quadratic", "smale"}));
  verify->add_option("--L", va.cert.coeff_flag,
                     "Lipschitz constant: value, \"estimate\", or \"exact\"");
  std::string verify_gamma;
  verify->add_option("--gamma", verify_gamma, "analytic gamma: value, \"estimate\", or \"exact\"");
  verify->add_option("--samples", va.cert.samples, "sample count for estimates");
  verify->add_option("--rho", va.rho_flag, "perturbation radius for --perturb");
  verify->add_option("--perturb", va.perturb, "number of perturbed starts inside the rho-ball");
  verify->add_option("--max-iter", va.max_iter, "iteration limit per run");
  verify->add_option("--tol", va.residual_tol, "residual tolerance per run");
  verify->add_option("--json", va.json_path, "write the report as JSON (- for stdout)");

  std::string catalog_json;
  auto* cat = app.add_subcommand("catalog", "list the built-in problems");
  cat->add_option("--json", catalog_json, "write the list as JSON (- for stdout)");

  app.add_option("--seed", seed_flag, "seed for all sampling (default: NEWTON_INCL_SEED or 0)");

  std::vector<const char*> argv;
  argv.push_back("newton-incl");
  for (const auto& s : args) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }

  try {
    std::uint64_t seed = default_seed();
    if (!seed_flag.empty()) {
      const double v = parse_real(seed_flag);
      if (v < 0.0 || v != std::floor(v))
        throw std::invalid_argument("--seed must be a nonnegative integer");
      seed = static_cast<std::uint64_t>(v);
    }
    ca.cert.seed = seed;
    va.cert.seed = seed;

    const auto pick_coeff = [](CertOptions& o, const std::string& gamma_flag) {
      const bool quad = o.family == "quadratic";
      const std::string& right = quad ? o.coeff_flag : gamma_flag;
      const std::string& wrong = quad ? gamma_flag : o.coeff_flag;
      if (!wrong.empty())
        throw std::invalid_argument(std::string("--") + (quad ? "gamma" : "L") +
                                    " does not apply to the " + o.family + " family");
      if (right.empty())
        throw std::invalid_argument(std::string("missing --") + (quad ? "L" : "gamma") +
                                    " (a value, \"estimate\", or \"exact\")");
      o.coeff_flag = right;
    };

    if (solve->parsed()) return cmd_solve(sa, out, err);
    if (certify->parsed()) {
      pick_coeff(ca.cert, certify_gamma);
      return cmd_certify(ca, out, err);
    }
    if (verify->parsed()) {
      pick_coeff(va.cert, verify_gamma);
      return cmd_verify(va, out, err);
    }
    if (cat->parsed()) return cmd_catalog(catalog_json, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const InfeasibleSubproblem& e) {
    err << "error: " << e.what() << "\n";
    return kExitStepFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}

}  // namespace newton_incl
