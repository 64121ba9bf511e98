// newton-incl - Newton's method for nonlinear inclusion problems over product cones
// Licensed under Apache 2.0

#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <string>

#include "newton_incl/majorant.hpp"
#include "newton_incl/minstep.hpp"
#include "newton_incl/problem.hpp"

namespace newton_incl {

enum class ParamProvenance { exact, user_supplied, sampled_estimate };

[[nodiscard]] std::string to_string(ParamProvenance p);

/// Semi-local convergence certificate for a problem at its base point.
/// `coeff` is L (quadratic family) or gamma (smale family); b bounds the
/// first step norm. hypothesis_ok is 2bL <= 1 resp. b*gamma <= 3 - 2 sqrt(2);
/// strict_ok is the strict version, which activates beta, rho_max = beta/2
/// and the quadratic rate constant Q. Quantities that do not exist for the
/// given parameters are NaN.
struct Certificate {
  MajorantFamily family{MajorantFamily::quadratic};
  double coeff{0.0};
  double b{0.0};
  ParamProvenance coeff_provenance{ParamProvenance::user_supplied};
  ParamProvenance b_provenance{ParamProvenance::exact};
  bool hypothesis_ok{false};
  bool strict_ok{false};
  double t_star{0.0};
  double t_bar{0.0};
  double beta{0.0};
  double rho_max{0.0};
  double rate_constant{0.0};  // "Q"

  [[nodiscard]] bool sampled() const {
    return coeff_provenance == ParamProvenance::sampled_estimate ||
           b_provenance == ParamProvenance::sampled_estimate;
  }
  [[nodiscard]] MajorantSpec spec() const;  // requires hypothesis parameters valid
};

/// Exact norm of the least-norm first step at the base point: the tightest
/// admissible f(0). Throws InfeasibleSubproblem when the linearized inclusion
/// at x_tilde has no solution (the regularity condition fails there).
[[nodiscard]] double compute_b(const InclusionProblem& problem);

[[nodiscard]] Certificate kantorovich_certificate(
    double L, double b, ParamProvenance L_prov = ParamProvenance::user_supplied,
    ParamProvenance b_prov = ParamProvenance::exact);

[[nodiscard]] Certificate smale_certificate(
    double gamma, double b, ParamProvenance gamma_prov = ParamProvenance::user_supplied,
    ParamProvenance b_prov = ParamProvenance::exact);

/// Perturbation data for restarts within distance rho of the base point.
/// t_star_rho is the bisection root of g (authoritative), cross-checked
/// against the closed form; t_star_rho_variant keeps the sign-variant
/// closed form of the quadratic family for diagnostic comparison (NaN for
/// the smale family).
struct RobustnessBall {
  PerturbedMajorant g;
  double rho{0.0};
  double t_star_rho{0.0};
  double rate_constant_rho{0.0};
  double t_star_rho_variant{0.0};
};

/// Requires strict_ok and 0 <= rho < rho_max; throws domain_error otherwise.
[[nodiscard]] RobustnessBall robustness_ball(const Certificate& cert, double rho);

struct SampledEstimate {
  double value{0.0};
  int n_samples{0};
  std::uint64_t seed{0};
};

/// Seeded sampled estimate of the affine-invariant Lipschitz constant on the
/// problem ball. A lower bound on the true L: certificates built from it are
/// empirical, never guaranteed.
[[nodiscard]] SampledEstimate estimate_L(const InclusionProblem& problem, int n_samples,
                                         std::uint64_t seed);

/// Seeded sampled estimate of gamma, from the k-th directional Taylor
/// coefficients along diagonal directions (an under-estimate of the full
/// multilinear norm). Zero for affine problems.
[[nodiscard]] SampledEstimate estimate_gamma(const InclusionProblem& problem, int n_samples,
                                             std::uint64_t seed);

struct BoundCheckResult {
  double lhs{0.0};
  double rhs{0.0};
  bool ok{true};
};

/// Linearization-error bound: the image norm of -E(x, y) under the inverse
/// map at the base point against e(t, s) = f(s) - f(t) - f'(t)(s - t), at
/// t = ||x - x_tilde||, s = t + ||y - x||. Requires s < min(R, domain_sup).
[[nodiscard]] BoundCheckResult linearization_error_check(const InclusionProblem& problem,
                                                         const Eigen::VectorXd& x,
                                                         const Eigen::VectorXd& y,
                                                         const MajorantSpec& m, double tol = 1e-9);

struct SampledBoundCheck {
  double lhs{0.0};  // sampled sup, a lower bound on the true operator norm
  double rhs{0.0};
  bool ok{true};
};

/// Sampled check of || T_x^{-1} F'(x_tilde) || <= -1/f'(t) at t = ||x - x_tilde||.
/// Directions: the 2n signed coordinate axes plus n_dirs seeded unit samples.
/// ok = false is a genuine violation; ok = true is evidence, not proof.
[[nodiscard]] SampledBoundCheck operator_bound_check(const InclusionProblem& problem,
                                                     const Eigen::VectorXd& x,
                                                     const MajorantSpec& m, int n_dirs = 200,
                                                     std::uint64_t seed = 0, double tol = 1e-9);

}  // namespace newton_incl
