// newton-incl - Newton's method for nonlinear inclusion problems over product cones
// Licensed under Apache 2.0
//
// Acceptance suite: end-to-end checks of the solver, the certificates, and
// the least-norm step machinery at their contractual tolerances. Each
// criterion prints one PASS/FAIL line; the process exits nonzero if any fail.

#include <Eigen/Dense>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "newton_incl/catalog.hpp"
#include "newton_incl/certify.hpp"
#include "newton_incl/cli.hpp"
#include "newton_incl/rng.hpp"
#include "newton_incl/solver.hpp"

using namespace newton_incl;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& msg) {
  if (!cond) throw Failure(msg);
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// --- independent scalar oracles (test-side implementations) -----------------

template <typename F>
double oracle_bisect(F&& f, double lo, double hi) {
  double flo = f(lo);
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    const double mid = 0.5 * (lo + hi);
    if ((f(mid) > 0.0) == (flo > 0.0))
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

template <typename F>
double oracle_golden_min(F&& f, double lo, double hi) {
  const double invphi = 0.6180339887498949;
  double x1 = hi - invphi * (hi - lo), x2 = lo + invphi * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < 300 && hi - lo > 1e-13; ++i) {
    if (f1 <= f2) {
      hi = x2; x2 = x1; f2 = f1; x1 = hi - invphi * (hi - lo); f1 = f(x1);
    } else {
      lo = x1; x1 = x2; f1 = f2; x2 = lo + invphi * (hi - lo); f2 = f(x2);
    }
  }
  return 0.5 * (lo + hi);
}

void check_step_bounds(const VerificationReport& rep, const std::string& what) {
  for (const auto& row : rep.steps) {
    require(row.step_le_gap.ok, what + ": step " + std::to_string(row.k) +
                                    " exceeds the t-gap by " + num(-row.step_le_gap.slack()));
    if (row.ratio_bound)
      require(row.ratio_bound->ok, what + ": squared-ratio bound fails at k=" +
                                       std::to_string(row.k));
    if (row.rate_bound)
      require(row.rate_bound->ok,
              what + ": rate-constant bound fails at k=" + std::to_string(row.k));
  }
}

// --- criteria ----------------------------------------------------------------

// Closed-form Kantorovich quantities for (L, b) = (1, 3/8) against independent
// bisection / golden-section oracles, all within 1e-12.
void criterion_1() {
  const auto f = [](double t) { return 0.5 * t * t - t + 0.375; };
  const double t_oracle = oracle_bisect(f, 0.0, 1.0);
  const double tmin = oracle_golden_min(f, 0.0, 2.0);
  const double beta_oracle = -f(tmin);
  const double q_oracle = 1.0 / (-2.0 * (tmin * 0.0 + (t_oracle - 1.0)));  // f'' = 1, f' = t - 1

  const Certificate cert = kantorovich_certificate(1.0, 0.375);
  require(cert.hypothesis_ok && cert.strict_ok, "hypothesis must hold for (1, 3/8)");
  require(std::abs(cert.t_star - 0.5) <= 1e-12, "t_star != 0.5");
  require(std::abs(cert.t_star - t_oracle) <= 1e-12, "t_star vs bisection oracle");
  require(std::abs(cert.beta - 0.125) <= 1e-12, "beta != 0.125");
  require(std::abs(cert.beta - beta_oracle) <= 1e-12, "beta vs golden-section oracle");
  require(std::abs(cert.rho_max - 0.0625) <= 1e-12, "rho_max != 0.0625");
  require(std::abs(cert.rho_max - 0.5 * beta_oracle) <= 1e-12, "rho_max vs oracle beta/2");
  require(std::abs(cert.rate_constant - 1.0) <= 1e-12, "Q != 1");
  require(std::abs(cert.rate_constant - q_oracle) <= 1e-12, "Q vs oracle");
}

// Smale certificate end-to-end on x^2 - 2 from 1.5 with gamma = 1/3, b = 1/12:
// convergence to sqrt(2) at residual 1e-12 within 6 steps, the root inside the
// certified radius, and every per-step inequality holding.
void criterion_2() {
  const InclusionProblem prob = catalog_problem("sqrt2");
  const double b = compute_b(prob);
  require(std::abs(b - 1.0 / 12.0) <= 1e-14, "b must be 1/12");
  const Certificate cert = smale_certificate(1.0 / 3.0, b, ParamProvenance::exact);
  require(cert.hypothesis_ok && cert.strict_ok, "alpha = 1/36 must certify");

  SolveConfig cfg;
  cfg.residual_tol = 1e-12;
  const SolveTrace trace = newton_solve(prob, prob.x_tilde(), cfg);
  require(trace.status == SolveStatus::converged_residual, "must converge on residual");
  require(trace.steps() <= 6, "needs at most 6 iterations");
  require(trace.residuals.back() <= 1e-12, "final residual above 1e-12");
  require(std::abs(trace.iterates.back()[0] - std::sqrt(2.0)) <= 1e-9, "limit is sqrt(2)");

  const double dist = std::abs(1.5 - std::sqrt(2.0));
  require(dist <= cert.t_star + 1e-6, "sqrt(2) must lie within t_star of 1.5");
  require(cert.t_star - dist > 1e-6, "certified radius margin above 1e-6");

  const MajorantTrace mtrace = majorant_sequence(cert.spec());
  const VerificationReport rep = verify_majorant_bounds(trace, mtrace, cert.rate_constant, 1e-9);
  check_step_bounds(rep, "smale run");
  require(rep.all_ok, "all bounds including the limit bounds must hold");
}

// Robustness at desk scale: the exact quadratic certificate of sqrt2, fifty
// seeded starts strictly inside rho = 0.4 rho_max, all converging with the
// perturbed-majorant bounds holding at 1e-9 slack.
void criterion_3() {
  const InclusionProblem prob = catalog_problem("sqrt2");
  const double L = 2.0 / 3.0;
  const double b = compute_b(prob);
  const Certificate cert = kantorovich_certificate(L, b, ParamProvenance::exact);
  require(cert.hypothesis_ok && cert.strict_ok, "2bL = 1/9 must certify");

  const auto f = [L, b](double t) { return 0.5 * L * t * t - t + b; };
  const double beta_oracle = -f(oracle_golden_min(f, 0.0, 2.0 / L));
  require(std::abs(cert.beta - beta_oracle) <= 1e-10, "beta vs maximization oracle");
  require(std::abs(cert.beta - (1.0 - 2.0 * L * b) / (2.0 * L)) <= 1e-12, "beta closed form");

  const double rho = 0.4 * cert.rho_max;
  const RobustnessBall ball = robustness_ball(cert, rho);
  const MajorantTrace gtrace = majorant_sequence(ball.g);

  SolveConfig cfg;
  cfg.residual_tol = 1e-12;
  for (int i = 0; i < 50; ++i) {
    SampleRng rng(2026, static_cast<std::uint64_t>(i));
    const VectorXd xhat = rng.in_ball(prob.x_tilde(), rho);
    require((xhat - prob.x_tilde()).norm() < rho, "start must lie strictly inside the ball");
    const SolveTrace tr = newton_solve(prob, xhat, cfg);
    require(tr.status == SolveStatus::converged_residual,
            "perturbed start " + std::to_string(i) + " failed to converge");
    const VerificationReport rep =
        verify_majorant_bounds(tr, gtrace, ball.rate_constant_rho, 1e-9);
    check_step_bounds(rep, "perturbed run " + std::to_string(i));
    require(rep.all_ok, "limit bounds fail on perturbed run " + std::to_string(i));
    for (const auto& xk : tr.iterates)
      require((xk - prob.x_tilde()).norm() <= ball.t_star_rho + 1e-9,
              "iterate escapes B(x_tilde, t_star_rho) on run " + std::to_string(i));
  }
}

// Least-norm step correctness on 500 seeded feasible subproblems: KKT to 1e-9
// and minimality against ten thousand sampled feasible points each.
void criterion_4() {
  SampleRng gen(77, 0);
  for (int trial = 0; trial < 500; ++trial) {
    const Eigen::Index n = 1 + static_cast<Eigen::Index>(gen.next_u64() % 3);
    Eigen::Index p = static_cast<Eigen::Index>(gen.next_u64() % 3);
    Eigen::Index q = static_cast<Eigen::Index>(gen.next_u64() % 2);
    if (p + q == 0) p = 1;
    MatrixXd J(p + q, n);
    for (Eigen::Index i = 0; i < p + q; ++i)
      for (Eigen::Index j = 0; j < n; ++j) J(i, j) = gen.uniform(-2.0, 2.0);
    VectorXd witness(n);
    for (Eigen::Index j = 0; j < n; ++j) witness[j] = gen.uniform(-1.0, 1.0);
    VectorXd F(p + q);
    for (Eigen::Index i = 0; i < p; ++i)
      F[i] = -(J.row(i) * witness)(0) - gen.uniform(0.05, 1.0);
    for (Eigen::Index i = p; i < p + q; ++i) F[i] = -(J.row(i) * witness)(0);
    const LinearInclusionSubproblem sub{J, F, ProductCone(p, q)};

    const NewtonStep step = min_norm_step(sub);

    // KKT to 1e-9
    VectorXd grad = step.d;
    if (p > 0) grad += J.topRows(p).transpose() * step.multipliers.head(p);
    if (q > 0) grad += J.bottomRows(q).transpose() * step.multipliers.tail(q);
    require(grad.lpNorm<Eigen::Infinity>() <= 1e-9, "stationarity fails at trial " +
                                                        std::to_string(trial));
    require(step.feasibility_residual <= 1e-9, "primal feasibility fails");
    if (p > 0) {
      require(step.multipliers.head(p).minCoeff() >= -1e-9, "multiplier sign fails");
      const VectorXd slack = J.topRows(p) * step.d + F.head(p);
      for (Eigen::Index i = 0; i < p; ++i)
        require(std::abs(step.multipliers[i] * slack[i]) <= 1e-9, "complementarity fails");
    }

    // null-space basis of the equality block for feasible sampling
    MatrixXd Z = MatrixXd::Identity(n, n);
    if (q > 0) {
      Eigen::JacobiSVD<MatrixXd> svd(J.bottomRows(q), Eigen::ComputeThinU | Eigen::ComputeFullV);
      Eigen::Index rank = 0;
      for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()[i] > 1e-12) ++rank;
      Z = svd.matrixV().rightCols(n - rank);
    }
    const int n_samples = 10000;
    for (int s = 0; s < n_samples; ++s) {
      VectorXd z = witness;
      if (Z.cols() > 0) {
        VectorXd y(Z.cols());
        for (Eigen::Index j = 0; j < Z.cols(); ++j) y[j] = gen.uniform(-1.0, 1.0);
        const VectorXd dir = Z * y;
        double tau = 3.0;
        for (Eigen::Index i = 0; i < p; ++i) {
          const double coef = (J.row(i) * dir)(0);
          const double base = (J.row(i) * witness)(0) + F[i];  // <= -0.05 by construction
          if (coef > 1e-14) tau = std::min(tau, -base / coef);
        }
        z += gen.uniform(0.0, 1.0) * tau * dir;
      }
      require(step.norm_d <= z.norm() + 1e-9, "a sampled feasible point is shorter");
      require((z - step.d).dot(step.d) >= -1e-8, "variational inequality fails");
    }
  }
}

// Degenerate cone: on the square system every Newton step coincides with the
// direct linear solve and the whole iterate sequence with textbook Newton.
void criterion_5() {
  const InclusionProblem prob = catalog_problem("system-2x2");
  require(prob.cone().p == 0, "system-2x2 must be equality-only");
  SolveConfig cfg;
  cfg.residual_tol = 1e-13;
  const SolveTrace trace = newton_solve(prob, prob.x_tilde(), cfg);
  require(trace.status == SolveStatus::converged_residual, "must converge");

  VectorXd x = prob.x_tilde();
  for (int k = 0; k < trace.steps(); ++k) {
    const VectorXd d = prob.jacobian(x).partialPivLu().solve(-prob.eval(x));
    const VectorXd via_cone = trace.iterates[static_cast<std::size_t>(k + 1)] -
                              trace.iterates[static_cast<std::size_t>(k)];
    require((via_cone - d).norm() <= 1e-10 * std::max(1.0, d.norm()),
            "step " + std::to_string(k) + " differs from the direct solve");
    x += d;  // textbook iterate
    require((trace.iterates[static_cast<std::size_t>(k + 1)] - x).norm() <=
                1e-10 * std::max(1.0, x.norm()),
            "iterate " + std::to_string(k + 1) + " differs from textbook Newton");
  }
}

// Positive diagonal rescaling of the components fixes the cone and must leave
// every iterate unchanged to 1e-9, on every catalog problem.
void criterion_6() {
  SampleRng rng(31337, 0);
  for (const auto& prob : catalog()) {
    VectorXd scales(prob.cone().dim());
    for (Eigen::Index i = 0; i < scales.size(); ++i) scales[i] = rng.uniform(0.2, 5.0);
    std::vector<PolyExpr> comps;
    for (std::size_t i = 0; i < prob.components().size(); ++i)
      comps.push_back(PolyExpr::constant(scales[static_cast<Eigen::Index>(i)]) *
                      prob.components()[i]);
    const InclusionProblem scaled(prob.name() + "-scaled", prob.dim_in(), prob.cone(), comps,
                                  prob.x_tilde(), prob.radius());

    SolveConfig cfg;
    cfg.max_iter = 8;
    cfg.residual_tol = 0.0;
    cfg.step_tol = 0.0;
    cfg.divergence_guard = false;
    const SolveTrace a = newton_solve(prob, prob.x_tilde(), cfg);
    const SolveTrace b = newton_solve(scaled, scaled.x_tilde(), cfg);
    const std::size_t common = std::min(a.iterates.size(), b.iterates.size());
    require(common >= 2, prob.name() + ": runs too short to compare");
    for (std::size_t k = 0; k < common; ++k)
      require((a.iterates[k] - b.iterates[k]).lpNorm<Eigen::Infinity>() <=
                  1e-9 * std::max(1.0, a.iterates[k].lpNorm<Eigen::Infinity>()),
              prob.name() + ": iterate " + std::to_string(k) + " moved under rescaling");
  }
}

// Majorant sequences over 200 + 200 seeded parameter pairs: strict monotone
// growth, the halving bound, and both quadratic bounds with the closed-form
// rate constant.
void criterion_7() {
  SampleRng rng(4242, 0);
  for (int trial = 0; trial < 400; ++trial) {
    const double coeff = rng.uniform(0.05, 20.0);
    const MajorantSpec spec =
        (trial < 200) ? MajorantSpec::quadratic(coeff, rng.uniform(0.01, 0.99) / (2.0 * coeff))
                      : MajorantSpec::smale(coeff, rng.uniform(0.005, 0.17) / coeff);
    const MajorantTrace tr = majorant_sequence(spec);
    const double Q = quadratic_rate_constant(spec);
    require(tr.converged, "sequence did not converge");
    for (std::size_t k = 0; k + 1 < tr.t.size(); ++k) {
      const double gap = tr.t[k + 1] - tr.t[k];
      require(gap > 0.0, "sequence not strictly increasing");
      require(tr.t[k + 1] < tr.t_star, "sequence crossed t_star");
      require(tr.t_star - tr.t[k + 1] <= 0.5 * (tr.t_star - tr.t[k]) + 1e-14,
              "halving bound fails at trial " + std::to_string(trial));
      require(tr.t_star - tr.t[k + 1] <=
                  Q * (tr.t_star - tr.t[k]) * (tr.t_star - tr.t[k]) + 1e-12,
              "quadratic limit bound fails");
      if (k >= 1) {
        const double prev = tr.t[k] - tr.t[k - 1];
        require(gap <= Q * prev * prev + 1e-12, "quadratic gap bound fails");
      }
    }
  }
}

// Linearization error on sqrt2 with the exact L: for quadratic F the bound is
// tight, so both sides agree to 1e-9 on a thousand admissible pairs.
void criterion_8() {
  const InclusionProblem prob = catalog_problem("sqrt2");
  const MajorantSpec m = MajorantSpec::quadratic(2.0 / 3.0, 1.0 / 12.0);
  SampleRng rng(808, 0);
  for (int trial = 0; trial < 1000; ++trial) {
    const double x = 1.5 + rng.uniform(-0.3, 0.3);
    const double t = std::abs(x - 1.5);
    const double room = 0.5 * (1.0 - 1e-9) - t;
    const double y = x + rng.uniform(-room, room);
    const auto r = linearization_error_check(prob, VectorXd::Constant(1, x),
                                             VectorXd::Constant(1, y), m);
    require(r.ok, "bound fails at trial " + std::to_string(trial));
    require(std::abs(r.lhs - r.rhs) <= 1e-9,
            "near-equality fails: |lhs - rhs| = " + num(std::abs(r.lhs - r.rhs)));
  }
}

// The verifier is not vacuous: certifying sqrt2 with L = 0.01 must produce
// flagged violations and exit code 5 from the verify subcommand.
void criterion_9() {
  std::ostringstream out, err;
  const int code =
      run_cli({"verify", "sqrt2", "--family", "quadratic", "--L", "0.01"}, out, err);
  require(code == 5, "expected exit 5, got " + std::to_string(code));
  require(out.str().find("VIOLATION") != std::string::npos, "violations must be printed");
}

struct Criterion {
  int id;
  std::string label;
  std::function<void()> body;
  double budget_ms;  // 0 = untimed
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "closed-form Kantorovich quantities vs oracles", criterion_1, 1000.0},
      {2, "smale certificate end-to-end on sqrt2", criterion_2, 1000.0},
      {3, "perturbed starts keep every bound (50 seeded runs)", criterion_3, 5000.0},
      {4, "least-norm step KKT and minimality (500 x 10^4)", criterion_4, 10000.0},
      {5, "degenerate cone reduces to textbook Newton", criterion_5, 0.0},
      {6, "positive diagonal rescaling fixes all iterates", criterion_6, 0.0},
      {7, "majorant sequence bounds over 400 seeded pairs", criterion_7, 5000.0},
      {8, "linearization-error bound is tight on sqrt2", criterion_8, 0.0},
      {9, "undersized L is flagged by verify with exit 5", criterion_9, 0.0},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool pass = true;
    try {
      c.body();
    } catch (const std::exception& e) {
      pass = false;
      detail = e.what();
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (pass && c.budget_ms > 0.0 && ms > c.budget_ms) {
      pass = false;
      detail = "runtime " + num(ms) + " ms exceeds budget " + num(c.budget_ms) + " ms";
    }
    std::printf("[%s] criterion %d: %s (%.0f ms)%s%s\n", pass ? "PASS" : "FAIL", c.id,
                c.label.c_str(), ms, detail.empty() ? "" : " -- ", detail.c_str());
    if (!pass) ++failures;
  }
  return failures;
}
