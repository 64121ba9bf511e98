// newton-incl - Newton's method for nonlinear inclusion problems over product cones
// Licensed under Apache 2.0

#include "newton_incl/solver.hpp"

#include <cmath>

namespace newton_incl {

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::converged_residual: return "converged_residual";
    case SolveStatus::converged_step: return "converged_step";
    case SolveStatus::max_iter: return "max_iter";
    case SolveStatus::step_failure: return "step_failure";
  }
  return "unknown";
}

SolveTrace newton_solve(const InclusionProblem& problem, const Eigen::VectorXd& x0,
                        const SolveConfig& config) {
  if (config.max_iter < 1) throw std::invalid_argument("newton_solve: max_iter must be >= 1");
  if (!(config.residual_tol >= 0.0) || !(config.step_tol >= 0.0))
    throw std::invalid_argument("newton_solve: tolerances must be >= 0");
  if (x0.size() != problem.dim_in())
    throw std::invalid_argument("newton_solve: x0 has wrong dimension");
  if (!x0.allFinite()) throw std::invalid_argument("newton_solve: x0 not finite");

  SolveTrace trace;
  trace.start_in_domain = (x0 - problem.x_tilde()).norm() <= problem.radius();
  Eigen::VectorXd x = x0;
  trace.iterates.push_back(x);

  bool step_tol_hit = false;
  int grow_streak = 0;
  for (int k = 0;; ++k) {
    const Eigen::VectorXd Fx = problem.eval(x);
    const double res = distance_to_cone(problem.cone(), Fx);
    trace.residuals.push_back(res);

    if (res <= config.residual_tol) {
      trace.status = SolveStatus::converged_residual;
      break;
    }
    if (step_tol_hit) {
      trace.status = SolveStatus::converged_step;
      break;
    }
    if (k >= config.max_iter) {
      trace.status = SolveStatus::max_iter;
      break;
    }
    if (config.divergence_guard && grow_streak >= 5) {
      trace.status = SolveStatus::max_iter;
      trace.diagnostic = "aborted: step norms grew for 5 consecutive iterations";
      break;
    }

    NewtonStep step;
    try {
      step = min_norm_step({problem.jacobian(x), Fx, problem.cone()});
    } catch (const InfeasibleSubproblem& e) {
      trace.status = SolveStatus::step_failure;
      trace.diagnostic = e.what();
      break;
    }

    x += step.d;
    trace.iterates.push_back(x);
    trace.step_norms.push_back(step.norm_d);
    const int ns = trace.steps();
    if (ns >= 2 && trace.step_norms[ns - 1] > trace.step_norms[ns - 2])
      ++grow_streak;
    else
      grow_streak = 0;
    if (step.norm_d <= config.step_tol) step_tol_hit = true;
  }
  return trace;
}

VerificationReport verify_majorant_bounds(const SolveTrace& trace,
                                          const MajorantTrace& majorant_trace,
                                          double rate_constant, double tol) {
  if (trace.iterates.empty()) throw std::invalid_argument("verify_majorant_bounds: empty trace");
  if (majorant_trace.t.empty())
    throw std::invalid_argument("verify_majorant_bounds: empty majorant trace");

  const auto t_at = [&majorant_trace](int k) {
    return k < static_cast<int>(majorant_trace.t.size())
               ? majorant_trace.t[static_cast<std::size_t>(k)]
               : majorant_trace.t_star;
  };

  VerificationReport rep;
  const int K = trace.steps();
  const double final_step = K > 0 ? trace.step_norms[static_cast<std::size_t>(K - 1)] : 0.0;
  rep.proxy_tolerance = tol + 10.0 * final_step;
  rep.note = "limit bounds use the final iterate in place of the limit point";

  for (int k = 0; k < K; ++k) {
    StepChecks row;
    row.k = k;
    const double step = trace.step_norms[static_cast<std::size_t>(k)];
    row.t_gap = t_at(k + 1) - t_at(k);
    row.step_le_gap = {step, row.t_gap, step <= row.t_gap + tol};
    if (k >= 1) {
      const double prev_step = trace.step_norms[static_cast<std::size_t>(k - 1)];
      const double prev_gap = t_at(k) - t_at(k - 1);
      if (prev_gap > 0.0) {
        const double rhs = row.t_gap / (prev_gap * prev_gap) * prev_step * prev_step;
        row.ratio_bound = InequalityCheck{step, rhs, step <= rhs + tol};
      }
      if (std::isfinite(rate_constant)) {
        const double rhs = rate_constant * prev_step * prev_step;
        row.rate_bound = InequalityCheck{step, rhs, step <= rhs + tol};
      }
    }
    rep.all_ok = rep.all_ok && row.step_le_gap.ok && (!row.ratio_bound || row.ratio_bound->ok) &&
                 (!row.rate_bound || row.rate_bound->ok);
    rep.steps.push_back(row);
  }

  const Eigen::VectorXd& proxy = trace.iterates.back();
  for (int k = 0; k <= K; ++k) {
    const double lhs = (proxy - trace.iterates[static_cast<std::size_t>(k)]).norm();
    const double rhs = majorant_trace.t_star - t_at(k);
    InequalityCheck c{lhs, rhs, lhs <= rhs + rep.proxy_tolerance};
    rep.all_ok = rep.all_ok && c.ok;
    rep.limit_bounds.push_back(c);
  }
  return rep;
}

void attach_bound_checks(SolveTrace& trace, const VerificationReport& report) {
  trace.bound_checks.clear();
  trace.bound_checks.reserve(report.steps.size());
  for (const auto& row : report.steps) {
    BoundCheckRecord rec;
    rec.t_gap = row.t_gap;
    rec.step_le_gap = row.step_le_gap.ok;
    rec.quad_ratio_ok = !row.ratio_bound || row.ratio_bound->ok;
    trace.bound_checks.push_back(rec);
  }
}

}  // namespace newton_incl
