// newton-incl - Newton's method for nonlinear inclusion problems over product cones
// Licensed under Apache 2.0

#pragma once

#include <concepts>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

#include "newton_incl/scalar_search.hpp"

namespace newton_incl {

enum class MajorantFamily { quadratic, smale };

/// Scalar majorant function from one of the two closed-form families:
///
///   quadratic (Kantorovich): f(t) = L t^2 / 2 - t + b     on [0, +inf)
///   smale (analytic):        f(t) = t/(1 - g t) - 2t + b  on [0, 1/g)
///
/// Both have f(0) = b > 0 and f'(0) = -1, with f' strictly increasing and
/// convex. `coeff` holds L for the quadratic family and gamma for smale.
struct MajorantSpec {
  MajorantFamily family{MajorantFamily::quadratic};
  double coeff{1.0};
  double b{1.0};

  static MajorantSpec quadratic(double L, double b);
  static MajorantSpec smale(double gamma, double b);

  [[nodiscard]] double domain_sup() const;
  [[nodiscard]] double f(double t) const;
  [[nodiscard]] double df(double t) const;
  /// Second derivative. For these smooth families this coincides with the
  /// left derivative of f', the quantity driving the quadratic rate bounds.
  [[nodiscard]] double ddf(double t) const;
};

/// Anything that evaluates like a scalar majorant on [0, domain_sup()).
template <typename M>
concept ScalarMajorant = requires(const M& m, double t) {
  { m.f(t) } -> std::convertible_to<double>;
  { m.df(t) } -> std::convertible_to<double>;
  { m.ddf(t) } -> std::convertible_to<double>;
  { m.domain_sup() } -> std::convertible_to<double>;
};

/// The base majorant shifted by rho and rescaled to unit slope at zero:
///
///   g(t) = -[f(t + rho) + 2 rho] / f'(rho)
///
/// For 0 <= rho < beta/2 this is again a majorant function with all four
/// qualification conditions, and it certifies every start within rho of the
/// original base point.
struct PerturbedMajorant {
  MajorantSpec base;
  double rho{0.0};
  double scale{1.0};  // -1 / f'(rho) > 0

  [[nodiscard]] double domain_sup() const { return base.domain_sup() - rho; }
  [[nodiscard]] double f(double t) const { return scale * (base.f(t + rho) + 2.0 * rho); }
  [[nodiscard]] double df(double t) const { return scale * base.df(t + rho); }
  [[nodiscard]] double ddf(double t) const { return scale * base.ddf(t + rho); }
};

/// User-supplied scalar majorant given as callbacks. Its qualification can
/// only be checked empirically (see check_conditions_sampled).
struct CustomMajorant {
  std::function<double(double)> value;
  std::function<double(double)> slope;
  std::function<double(double)> curvature;
  double sup{std::numeric_limits<double>::infinity()};

  [[nodiscard]] double domain_sup() const { return sup; }
  [[nodiscard]] double f(double t) const { return value(t); }
  [[nodiscard]] double df(double t) const { return slope(t); }
  [[nodiscard]] double ddf(double t) const { return curvature(t); }
};

/// Qualification flags for a majorant candidate f on [0, R):
///   normalized        f(0) > 0 and f'(0) = -1
///   convex_increasing f' strictly increasing and convex
///   has_root          f(t) = 0 for some t in (0, R)
///   goes_negative     f(t) < 0 for some t in (0, R)   (strict version)
struct MajorantConditions {
  bool normalized{false};
  bool convex_increasing{false};
  bool has_root{false};
  bool goes_negative{false};
  bool empirical{false};  // true when established by grid sampling only

  [[nodiscard]] bool certifiable() const { return normalized && convex_increasing && has_root; }
  [[nodiscard]] bool strict() const { return certifiable() && goes_negative; }
};

/// Scalar Newton trace for a majorant function: t_0 = 0, t_{k+1} = t_k - f/f'.
struct MajorantTrace {
  std::vector<double> t;  // strictly increasing, every entry < t_star
  double t_star{0.0};     // smallest zero of f
  double t_bar{0.0};      // sup { t : f'(t) < 0 }
  double beta{0.0};       // sup { -f(t) : t in [0, R) }, 0 at the boundary case
  bool converged{false};
};

/// One scalar Newton step t - f(t)/f'(t). Valid for 0 <= t < t_star, where
/// f(t) > 0 and f'(t) < 0; the result again lies in (t, t_star).
template <ScalarMajorant M>
[[nodiscard]] double newton_iterate(const M& m, double t) {
  const double ft = m.f(t);
  const double dft = m.df(t);
  if (!(dft < 0.0)) throw std::domain_error("newton_iterate: f'(t) >= 0");
  if (!(ft > 0.0)) throw std::domain_error("newton_iterate: f(t) <= 0, t is at or past the smallest zero");
  return t - ft / dft;
}

/// Rate constant f''(t*) / (-2 f'(t*)) governing the quadratic bounds.
template <ScalarMajorant M>
[[nodiscard]] double rate_constant_at(const M& m, double t_star) {
  const double d = m.df(t_star);
  if (!(d < 0.0)) throw std::domain_error("rate_constant_at: f'(t*) >= 0 (boundary case)");
  return m.ddf(t_star) / (-2.0 * d);
}

// Closed-form quantities for the two families. smallest_zero cross-checks the
// closed form against a bisection root and throws on disagreement > 1e-10;
// beta does the same against a golden-section search.
[[nodiscard]] double smallest_zero(const MajorantSpec& m);
[[nodiscard]] double t_bar(const MajorantSpec& m);
[[nodiscard]] double t_bar(const PerturbedMajorant& m);
[[nodiscard]] double beta(const MajorantSpec& m);
[[nodiscard]] double beta(const PerturbedMajorant& m);
[[nodiscard]] double quadratic_rate_constant(const MajorantSpec& m);
[[nodiscard]] MajorantConditions check_conditions(const MajorantSpec& m);

/// Shift-and-rescale of the majorant; requires 0 <= rho < beta(m)/2.
[[nodiscard]] PerturbedMajorant perturbed_majorant(const MajorantSpec& m, double rho);

/// Bisection root on [0, hi]; hi defaults to the slope-zero point t_bar.
/// Accepts a nonnegative minimum within value_tol of zero (double root).
template <ScalarMajorant M>
[[nodiscard]] double smallest_zero_bisect(const M& m, double hi, double xtol = 1e-13,
                                          double value_tol = 1e-12) {
  const double fhi = m.f(hi);
  if (fhi > 0.0) {
    if (fhi <= value_tol) return hi;  // double root at the slope-zero point
    throw std::domain_error("smallest_zero_bisect: f stays positive, no root below hi");
  }
  return bisect_root([&m](double t) { return m.f(t); }, 0.0, hi, xtol);
}

[[nodiscard]] MajorantTrace majorant_sequence(const MajorantSpec& m, int k_max = 60,
                                              double stop_tol = 1e-14);
[[nodiscard]] MajorantTrace majorant_sequence(const PerturbedMajorant& m, int k_max = 60,
                                              double stop_tol = 1e-14);

/// Grid-sampled qualification check for user-supplied majorants, on
/// [0, min(domain_sup, horizon)]. Results are flagged empirical.
template <ScalarMajorant M>
[[nodiscard]] MajorantConditions check_conditions_sampled(const M& m, int grid = 1000,
                                                          double horizon = 1e3) {
  MajorantConditions c;
  c.empirical = true;
  const double sup = m.domain_sup();
  const double hi = std::isfinite(sup) ? sup * (1.0 - 1e-9) : horizon;
  c.normalized = (m.f(0.0) > 0.0) && (std::abs(m.df(0.0) + 1.0) <= 1e-9);
  c.convex_increasing = true;
  double min_f = m.f(0.0);
  double prev_df = m.df(0.0);
  double prev_ddf = m.ddf(0.0);
  for (int i = 1; i <= grid; ++i) {
    const double t = hi * static_cast<double>(i) / static_cast<double>(grid);
    const double ft = m.f(t);
    const double dft = m.df(t);
    const double ddft = m.ddf(t);
    if (!(dft > prev_df)) c.convex_increasing = false;
    if (ddft < prev_ddf - 1e-9 * (1.0 + std::abs(prev_ddf))) c.convex_increasing = false;
    min_f = std::min(min_f, ft);
    prev_df = dft;
    prev_ddf = ddft;
  }
  c.goes_negative = (min_f < 0.0);
  c.has_root = (min_f <= 0.0);
  return c;
}

namespace detail {
// Shared scalar Newton loop given a precomputed smallest zero.
template <ScalarMajorant M>
std::pair<std::vector<double>, bool> majorant_sequence_core(const M& m, double t_star, int k_max,
                                                            double stop_tol) {
  if (k_max < 1) throw std::invalid_argument("majorant_sequence: k_max must be >= 1");
  if (!(stop_tol >= 0.0)) throw std::invalid_argument("majorant_sequence: stop_tol must be >= 0");
  std::vector<double> t{0.0};
  bool converged = false;
  for (int k = 0; k < k_max; ++k) {
    const double cur = t.back();
    if (t_star - cur < stop_tol) {
      converged = true;
      break;
    }
    const double fcur = m.f(cur);
    const double dcur = m.df(cur);
    if (!(fcur > 0.0) || !(dcur < 0.0)) {
      // cur reached the root to rounding; t_k < t_star holds in exact
      // arithmetic, so this is only possible within fp slack of t_star
      converged = true;
      break;
    }
    const double next = cur - fcur / dcur;
    if (!(next > cur) || next >= t_star) {
      converged = true;
      break;
    }
    t.push_back(next);
  }
  if (!converged) converged = (t_star - t.back() < stop_tol);
  return {std::move(t), converged};
}
}  // namespace detail

}  // namespace newton_incl
