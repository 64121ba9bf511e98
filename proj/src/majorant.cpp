// newton-incl - Newton's method for nonlinear inclusion problems over product cones
// Licensed under Apache 2.0

#include "newton_incl/majorant.hpp"

#include <cmath>
#include <string>

namespace newton_incl {

namespace {

// Computed, not a literal, so user values written as 3 - 2*sqrt(2) land
// exactly on the boundary.
const double kSmaleAlphaMax = 3.0 - 2.0 * std::sqrt(2.0);

void check_domain(const MajorantSpec& m, double t) {
  if (!(t >= 0.0) || t >= m.domain_sup())
    throw std::domain_error("majorant: t = " + std::to_string(t) + " outside [0, " +
                            std::to_string(m.domain_sup()) + ")");
}

double alpha_of(const MajorantSpec& m) { return m.b * m.coeff; }

}  // namespace

MajorantSpec MajorantSpec::quadratic(double L, double b) {
  if (!(L > 0.0) || !(b > 0.0))
    throw std::invalid_argument("MajorantSpec::quadratic: need L > 0 and b > 0");
  return MajorantSpec{MajorantFamily::quadratic, L, b};
}

MajorantSpec MajorantSpec::smale(double gamma, double b) {
  if (!(gamma > 0.0) || !(b > 0.0))
    throw std::invalid_argument("MajorantSpec::smale: need gamma > 0 and b > 0");
  return MajorantSpec{MajorantFamily::smale, gamma, b};
}

double MajorantSpec::domain_sup() const {
  return family == MajorantFamily::quadratic ? std::numeric_limits<double>::infinity()
                                             : 1.0 / coeff;
}

double MajorantSpec::f(double t) const {
  check_domain(*this, t);
  if (family == MajorantFamily::quadratic) return 0.5 * coeff * t * t - t + b;
  return t / (1.0 - coeff * t) - 2.0 * t + b;
}

double MajorantSpec::df(double t) const {
  check_domain(*this, t);
  if (family == MajorantFamily::quadratic) return coeff * t - 1.0;
  const double u = 1.0 - coeff * t;
  return 1.0 / (u * u) - 2.0;
}

double MajorantSpec::ddf(double t) const {
  check_domain(*this, t);
  if (family == MajorantFamily::quadratic) return coeff;
  const double u = 1.0 - coeff * t;
  return 2.0 * coeff / (u * u * u);
}

double t_bar(const MajorantSpec& m) {
  if (m.family == MajorantFamily::quadratic) return 1.0 / m.coeff;
  return (1.0 - 1.0 / std::sqrt(2.0)) / m.coeff;  // where (1 - g t)^2 = 1/2
}

double t_bar(const PerturbedMajorant& m) { return t_bar(m.base) - m.rho; }

double smallest_zero(const MajorantSpec& m) {
  double closed = 0.0;
  if (m.family == MajorantFamily::quadratic) {
    const double disc = 1.0 - 2.0 * m.b * m.coeff;
    if (disc < 0.0)
      throw std::domain_error("smallest_zero: 2bL > 1, the quadratic majorant has no root");
    closed = 2.0 * m.b / (1.0 + std::sqrt(disc));
  } else {
    const double a = alpha_of(m);
    if (a > kSmaleAlphaMax)
      throw std::domain_error("smallest_zero: b*gamma > 3 - 2*sqrt(2), no root");
    const double disc = std::max((a + 1.0) * (a + 1.0) - 8.0 * a, 0.0);
    closed = 2.0 * m.b / ((a + 1.0) + std::sqrt(disc));
  }
  const double root = smallest_zero_bisect(m, t_bar(m));
  // Near the boundary hypothesis the root turns double and bisection can only
  // localize it to the conditioning limit; widen the check accordingly.
  const double cond = root_uncertainty(m.df(root), m.ddf(root), 1e-13 * std::max(1.0, m.b));
  if (std::abs(root - closed) > std::max(1e-10 * std::max(1.0, closed), 2.0 * cond))
    throw std::runtime_error("smallest_zero: closed form " + std::to_string(closed) +
                             " disagrees with bisection root " + std::to_string(root));
  return closed;
}

double beta(const MajorantSpec& m) {
  double closed = 0.0;
  if (m.family == MajorantFamily::quadratic) {
    if (!(2.0 * m.b * m.coeff < 1.0))
      throw std::domain_error("beta: requires 2bL < 1 (f must go strictly negative)");
    closed = (1.0 - 2.0 * m.coeff * m.b) / (2.0 * m.coeff);
  } else {
    if (!(alpha_of(m) < kSmaleAlphaMax))
      throw std::domain_error("beta: requires b*gamma < 3 - 2*sqrt(2)");
    closed = kSmaleAlphaMax / m.coeff - m.b;
  }
  // cross-check against direct maximization of -f
  const double tb = t_bar(m);
  const double sup = m.domain_sup();
  const double hi = std::isfinite(sup) ? 0.5 * (tb + sup) : 2.0 * tb;
  const double tmin = golden_section_min([&m](double t) { return m.f(t); }, 0.0, hi, 1e-12);
  const double numeric = -m.f(tmin);
  if (std::abs(numeric - closed) > 1e-10 * std::max(1.0, closed))
    throw std::runtime_error("beta: closed form " + std::to_string(closed) +
                             " disagrees with maximization value " + std::to_string(numeric));
  return closed;
}

double beta(const PerturbedMajorant& m) { return m.scale * (beta(m.base) - 2.0 * m.rho); }

double quadratic_rate_constant(const MajorantSpec& m) {
  const double ts = smallest_zero(m);
  const double generic = rate_constant_at(m, ts);
  double closed = 0.0;
  if (m.family == MajorantFamily::quadratic) {
    closed = m.coeff / (2.0 * std::sqrt(1.0 - 2.0 * m.b * m.coeff));
  } else {
    const double u = 1.0 - m.coeff * ts;
    closed = m.coeff / (u * (2.0 * u * u - 1.0));
  }
  if (std::abs(generic - closed) > 1e-12 * std::max(1.0, std::abs(closed)))
    throw std::runtime_error("quadratic_rate_constant: generic formula disagrees with family form");
  return generic;
}

MajorantConditions check_conditions(const MajorantSpec& m) {
  MajorantConditions c;
  c.normalized = (m.f(0.0) > 0.0) && (m.df(0.0) == -1.0);
  c.convex_increasing = true;  // holds for both families with positive coefficients
  if (m.family == MajorantFamily::quadratic) {
    const double h = 2.0 * m.b * m.coeff;
    c.has_root = (h <= 1.0);
    c.goes_negative = (h < 1.0);
  } else {
    const double a = alpha_of(m);
    c.has_root = (a <= kSmaleAlphaMax);
    c.goes_negative = (a < kSmaleAlphaMax);
  }
  return c;
}

PerturbedMajorant perturbed_majorant(const MajorantSpec& m, double rho) {
  if (!(rho >= 0.0)) throw std::domain_error("perturbed_majorant: rho must be >= 0");
  const double bound = 0.5 * beta(m);  // throws when f never goes negative
  if (rho >= bound)
    throw std::domain_error("perturbed_majorant: rho = " + std::to_string(rho) +
                            " must be below beta/2 = " + std::to_string(bound));
  return PerturbedMajorant{m, rho, -1.0 / m.df(rho)};
}

MajorantTrace majorant_sequence(const MajorantSpec& m, int k_max, double stop_tol) {
  MajorantTrace tr;
  tr.t_star = smallest_zero(m);
  tr.t_bar = t_bar(m);
  const auto cond = check_conditions(m);
  tr.beta = cond.goes_negative ? beta(m) : 0.0;
  auto [t, conv] = detail::majorant_sequence_core(m, tr.t_star, k_max, stop_tol);
  tr.t = std::move(t);
  tr.converged = conv;
  return tr;
}

MajorantTrace majorant_sequence(const PerturbedMajorant& m, int k_max, double stop_tol) {
  MajorantTrace tr;
  tr.t_star = smallest_zero_bisect(m, t_bar(m));
  tr.t_bar = t_bar(m);
  tr.beta = beta(m);
  auto [t, conv] = detail::majorant_sequence_core(m, tr.t_star, k_max, stop_tol);
  tr.t = std::move(t);
  tr.converged = conv;
  return tr;
}

}  // namespace newton_incl
