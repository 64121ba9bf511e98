// newton-incl - Newton's method for nonlinear inclusion problems over product cones
// Licensed under Apache 2.0

#include "newton_incl/certify.hpp"

#include <cmath>
#include <limits>

#include "newton_incl/rng.hpp"
#include "newton_incl/scalar_search.hpp"

namespace newton_incl {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
}

std::string to_string(ParamProvenance p) {
  switch (p) {
    case ParamProvenance::exact: return "exact";
    case ParamProvenance::user_supplied: return "user_supplied";
    case ParamProvenance::sampled_estimate: return "sampled_estimate";
  }
  return "unknown";
}

MajorantSpec Certificate::spec() const {
  return family == MajorantFamily::quadratic ? MajorantSpec::quadratic(coeff, b)
                                             : MajorantSpec::smale(coeff, b);
}

double compute_b(const InclusionProblem& problem) {
  const Eigen::VectorXd& xt = problem.x_tilde();
  try {
    return min_norm_step({problem.jacobian(xt), problem.eval(xt), problem.cone()}).norm_d;
  } catch (const InfeasibleSubproblem& e) {
    throw InfeasibleSubproblem(
        std::string("compute_b: regularity condition fails at the base point (") + e.what() + ")",
        e.certificate);
  }
}

namespace {

Certificate build_certificate(MajorantFamily family, double coeff, double b,
                              ParamProvenance coeff_prov, ParamProvenance b_prov) {
  if (!(coeff > 0.0)) throw std::invalid_argument("certificate: coefficient must be > 0");
  if (!(b > 0.0)) throw std::invalid_argument("certificate: b must be > 0");
  Certificate c;
  c.family = family;
  c.coeff = coeff;
  c.b = b;
  c.coeff_provenance = coeff_prov;
  c.b_provenance = b_prov;

  const MajorantSpec m = c.spec();
  const MajorantConditions cond = check_conditions(m);
  c.hypothesis_ok = cond.certifiable();
  c.strict_ok = cond.strict();
  c.t_bar = t_bar(m);
  if (c.hypothesis_ok) {
    c.t_star = smallest_zero(m);
    if (c.strict_ok) {
      c.beta = beta(m);
      c.rho_max = 0.5 * c.beta;
      c.rate_constant = quadratic_rate_constant(m);
    } else {
      c.beta = 0.0;  // boundary case: the minimum of f is exactly zero
      c.rho_max = 0.0;
      c.rate_constant = kNaN;
    }
  } else {
    c.t_star = kNaN;
    c.beta = kNaN;
    c.rho_max = kNaN;
    c.rate_constant = kNaN;
  }
  return c;
}

}  // namespace

Certificate kantorovich_certificate(double L, double b, ParamProvenance L_prov,
                                    ParamProvenance b_prov) {
  return build_certificate(MajorantFamily::quadratic, L, b, L_prov, b_prov);
}

Certificate smale_certificate(double gamma, double b, ParamProvenance gamma_prov,
                              ParamProvenance b_prov) {
  return build_certificate(MajorantFamily::smale, gamma, b, gamma_prov, b_prov);
}

RobustnessBall robustness_ball(const Certificate& cert, double rho) {
  if (!cert.strict_ok)
    throw std::domain_error("robustness_ball: certificate lacks the strict hypothesis");
  if (!(rho >= 0.0) || rho >= cert.rho_max)
    throw std::domain_error("robustness_ball: rho = " + std::to_string(rho) +
                            " out of range [0, rho_max = " + std::to_string(cert.rho_max) + ")");
  const MajorantSpec m = cert.spec();
  RobustnessBall ball;
  ball.g = perturbed_majorant(m, rho);
  ball.rho = rho;
  ball.t_star_rho = smallest_zero_bisect(ball.g, t_bar(ball.g));

  // Closed form of the smallest zero of g, solved from f(t + rho) + 2 rho = 0.
  double closed = 0.0;
  if (m.family == MajorantFamily::quadratic) {
    const double bb = m.b + 2.0 * rho;
    closed = 2.0 * bb / (1.0 + std::sqrt(1.0 - 2.0 * m.coeff * bb)) - rho;
    // sign-variant form (b - 2 rho under the radical), kept for diagnostics
    const double rad = 1.0 - 2.0 * m.coeff * (m.b - 2.0 * rho);
    ball.t_star_rho_variant =
        rad >= 0.0 ? (1.0 - rho * m.coeff - std::sqrt(rad)) / m.coeff : kNaN;
  } else {
    const double bb = m.b + 2.0 * rho;
    const double a = m.coeff * bb;
    const double disc = std::max((a + 1.0) * (a + 1.0) - 8.0 * a, 0.0);
    closed = 2.0 * bb / ((a + 1.0) + std::sqrt(disc)) - rho;
    ball.t_star_rho_variant = kNaN;
  }
  const double cond = root_uncertainty(ball.g.df(ball.t_star_rho), ball.g.ddf(ball.t_star_rho),
                                       1e-13 * std::max(1.0, ball.g.f(0.0)));
  if (std::abs(closed - ball.t_star_rho) >
      std::max(1e-10 * std::max(1.0, ball.t_star_rho), 2.0 * cond))
    throw std::runtime_error("robustness_ball: closed form disagrees with bisection root");

  ball.rate_constant_rho = rate_constant_at(ball.g, ball.t_star_rho);
  return ball;
}

namespace {

// Base-point image norm machinery shared by the sampled estimators.
struct BaseContext {
  Eigen::MatrixXd J0;
  const ProductCone* cone;
};

BaseContext base_context(const InclusionProblem& problem) {
  BaseContext ctx{problem.jacobian(problem.x_tilde()), &problem.cone()};
  const double probe =
      sublinear_image_norm(ctx.J0, *ctx.cone, -problem.eval(problem.x_tilde()));
  if (!std::isfinite(probe))
    throw std::runtime_error("estimate: regularity condition fails at the base point");
  return ctx;
}

}  // namespace

SampledEstimate estimate_L(const InclusionProblem& problem, int n_samples, std::uint64_t seed) {
  if (n_samples < 1) throw std::invalid_argument("estimate_L: n_samples must be >= 1");
  const auto ctx = base_context(problem);
  const Eigen::VectorXd& xt = problem.x_tilde();
  const double R = problem.radius();
  double best = 0.0;
  for (int i = 0; i < n_samples; ++i) {
    SampleRng rng(seed, static_cast<std::uint64_t>(i));
    const Eigen::VectorXd x = rng.in_ball(xt, R);
    const Eigen::VectorXd y = rng.in_ball(xt, R);
    const double dist = (y - x).norm();
    if (dist < 1e-12) continue;
    const Eigen::VectorXd u = rng.unit_vector(problem.dim_in());
    const Eigen::VectorXd w = (problem.jacobian(y) - problem.jacobian(x)) * u;
    const double val = sublinear_image_norm(ctx.J0, *ctx.cone, w) / dist;
    if (!std::isfinite(val))
      throw std::runtime_error("estimate_L: image-norm subproblem became infeasible");
    best = std::max(best, val);
  }
  return {best, n_samples, seed};
}

SampledEstimate estimate_gamma(const InclusionProblem& problem, int n_samples,
                               std::uint64_t seed) {
  if (n_samples < 1) throw std::invalid_argument("estimate_gamma: n_samples must be >= 1");
  const int deg = problem.degree();
  if (deg <= 1) return {0.0, n_samples, seed};
  const auto ctx = base_context(problem);
  const Eigen::VectorXd& xt = problem.x_tilde();
  double best = 0.0;
  for (int i = 0; i < n_samples; ++i) {
    SampleRng rng(seed, static_cast<std::uint64_t>(i));
    const Eigen::VectorXd v = rng.unit_vector(problem.dim_in());
    const auto coeffs = problem.taylor_along(xt, v, deg);
    for (int k = 2; k <= deg; ++k) {
      const double norm_k = sublinear_image_norm(ctx.J0, *ctx.cone, coeffs[static_cast<std::size_t>(k)]);
      if (!std::isfinite(norm_k))
        throw std::runtime_error("estimate_gamma: image-norm subproblem became infeasible");
      best = std::max(best, std::pow(norm_k, 1.0 / static_cast<double>(k - 1)));
    }
  }
  return {best, n_samples, seed};
}

BoundCheckResult linearization_error_check(const InclusionProblem& problem,
                                           const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                                           const MajorantSpec& m, double tol) {
  const Eigen::VectorXd& xt = problem.x_tilde();
  const double t = (x - xt).norm();
  const double s = t + (y - x).norm();
  if (s >= std::min(problem.radius(), m.domain_sup()))
    throw std::domain_error("linearization_error_check: points leave the admissible ball");
  const Eigen::VectorXd err =
      problem.eval(y) - problem.eval(x) - problem.jacobian(x) * (y - x);
  BoundCheckResult r;
  r.lhs = sublinear_image_norm(problem.jacobian(xt), problem.cone(), -err);
  r.rhs = m.f(s) - m.f(t) - m.df(t) * (s - t);
  r.ok = r.lhs <= r.rhs + tol;
  return r;
}

SampledBoundCheck operator_bound_check(const InclusionProblem& problem, const Eigen::VectorXd& x,
                                       const MajorantSpec& m, int n_dirs, std::uint64_t seed,
                                       double tol) {
  const Eigen::VectorXd& xt = problem.x_tilde();
  const double t = (x - xt).norm();
  if (t >= t_bar(m)) throw std::domain_error("operator_bound_check: ||x - x_tilde|| >= t_bar");
  const Eigen::MatrixXd J0 = problem.jacobian(xt);
  const Eigen::MatrixXd Jx = problem.jacobian(x);
  const int n = problem.dim_in();

  double best = 0.0;
  const auto probe = [&](const Eigen::VectorXd& u) {
    const double val = sublinear_image_norm(Jx, problem.cone(), J0 * u);
    if (!std::isfinite(val))
      throw std::runtime_error("operator_bound_check: subproblem infeasible at x");
    best = std::max(best, val);
  };
  for (int i = 0; i < n; ++i) {
    probe(Eigen::VectorXd::Unit(n, i));
    probe(-Eigen::VectorXd::Unit(n, i));
  }
  for (int i = 0; i < n_dirs; ++i) {
    SampleRng rng(seed, static_cast<std::uint64_t>(i));
    probe(rng.unit_vector(n));
  }

  SampledBoundCheck r;
  r.lhs = best;
  r.rhs = -1.0 / m.df(t);
  r.ok = r.lhs <= r.rhs + tol;
  return r;
}

}  // namespace newton_incl
