// newton-incl - Newton's method for nonlinear inclusion problems over product cones
// Licensed under Apache 2.0

#pragma once

#include <Eigen/Core>
#include <optional>
#include <string>
#include <vector>

#include "newton_incl/majorant.hpp"
#include "newton_incl/minstep.hpp"
#include "newton_incl/problem.hpp"

namespace newton_incl {

struct SolveConfig {
  int max_iter{50};
  double residual_tol{1e-10};
  double step_tol{1e-12};
  bool record_bounds{false};
  /// Abort when step norms grow for 5 consecutive iterations. Uncertified
  /// starts can wander; certified ones never trip this.
  bool divergence_guard{true};
};

enum class SolveStatus { converged_residual, converged_step, max_iter, step_failure };

[[nodiscard]] std::string to_string(SolveStatus s);

/// Per-step record mirrored into the trace JSON.
struct BoundCheckRecord {
  double t_gap{0.0};
  bool step_le_gap{true};
  bool quad_ratio_ok{true};
};

struct SolveTrace {
  std::vector<Eigen::VectorXd> iterates;   // x_0 .. x_K
  std::vector<double> step_norms;          // K entries
  std::vector<double> residuals;           // d(0, F(x_k) - C), K + 1 entries
  std::vector<BoundCheckRecord> bound_checks;  // optional, K entries when attached
  SolveStatus status{SolveStatus::max_iter};
  bool start_in_domain{true};
  std::string diagnostic;

  [[nodiscard]] int steps() const { return static_cast<int>(step_norms.size()); }
};

/// Newton iteration x_{k+1} = x_k + argmin{ ||d|| : F(x_k) + F'(x_k) d in C }.
/// Stops on residual <= residual_tol, step norm <= step_tol, or max_iter.
/// A run from a certified base point stays inside B(x_tilde, t_star) and
/// converges with the rates attested by verify_majorant_bounds.
[[nodiscard]] SolveTrace newton_solve(const InclusionProblem& problem, const Eigen::VectorXd& x0,
                                      const SolveConfig& config = {});

struct InequalityCheck {
  double lhs{0.0};
  double rhs{0.0};
  bool ok{true};
  [[nodiscard]] double slack() const { return rhs - lhs; }
};

struct StepChecks {
  int k{0};          // step x_k -> x_{k+1}
  double t_gap{0.0}; // t_{k+1} - t_k
  InequalityCheck step_le_gap;                 // ||x_{k+1}-x_k|| <= t_{k+1}-t_k
  std::optional<InequalityCheck> ratio_bound;  // <= (t-gap ratio) * prev step^2, k >= 1
  std::optional<InequalityCheck> rate_bound;   // <= Q * prev step^2, k >= 1
};

struct VerificationReport {
  std::vector<StepChecks> steps;
  std::vector<InequalityCheck> limit_bounds;  // ||x_proxy - x_k|| <= t_star - t_k
  bool all_ok{true};
  double proxy_tolerance{0.0};
  std::string note;
};

/// Checks the per-iteration majorant inequalities of a converged trace:
/// step norms against t-gaps, the squared-ratio bound, the rate-constant
/// bound (skipped when rate_constant is NaN), and the limit bounds using the
/// final iterate as a stand-in for the limit (its tolerance is inflated by
/// ten times the final step norm, recorded in the report note). The t-trace
/// is padded with t_star past its recorded length.
[[nodiscard]] VerificationReport verify_majorant_bounds(const SolveTrace& trace,
                                                        const MajorantTrace& majorant_trace,
                                                        double rate_constant,
                                                        double tol = 1e-9);

/// Copies the per-step verdicts into trace.bound_checks.
void attach_bound_checks(SolveTrace& trace, const VerificationReport& report);

struct RegionCheck {
  bool in_region{false};
  bool radius_ok{false};
  bool step_bound_ok{false};
  double step_norm{0.0};
  double radius{0.0};
  double bound{0.0};
  std::string diagnostic;
};

/// Membership test for the invariant region K(t): ||x - x_tilde|| <= t and
/// the least-norm step at x has norm at most -f(t)/f'(t).
template <ScalarMajorant M>
[[nodiscard]] RegionCheck region_K_check(const InclusionProblem& problem, const Eigen::VectorXd& x,
                                         double t, const M& m, double tol = 1e-9) {
  const double ft = m.f(t);
  const double dft = m.df(t);
  if (!(ft > 0.0) || !(dft < 0.0))
    throw std::domain_error("region_K_check: t must lie in [0, t_star)");
  RegionCheck rc;
  rc.radius = (x - problem.x_tilde()).norm();
  rc.radius_ok = rc.radius <= t + tol;
  rc.bound = -ft / dft;
  const Eigen::VectorXd w = -problem.eval(x);
  rc.step_norm = sublinear_image_norm(problem.jacobian(x), problem.cone(), w);
  if (!std::isfinite(rc.step_norm)) {
    rc.step_bound_ok = false;
    rc.diagnostic = "linearized inclusion infeasible at x";
  } else {
    rc.step_bound_ok = rc.step_norm <= rc.bound + tol;
  }
  rc.in_region = rc.radius_ok && rc.step_bound_ok;
  return rc;
}

}  // namespace newton_incl
