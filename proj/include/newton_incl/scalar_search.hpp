// newton-incl - Newton's method for nonlinear inclusion problems over product cones
// Licensed under Apache 2.0

#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>

namespace newton_incl {

/// Bisection root of a continuous scalar function on [lo, hi].
/// Requires a sign change (either endpoint may be zero). Returns the midpoint
/// of the final bracket, whose width is at most xtol.
template <typename F>
[[nodiscard]] double bisect_root(F&& f, double lo, double hi, double xtol = 1e-13,
                                 int max_iter = 200) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0))
    throw std::domain_error("bisect_root: no sign change on the given interval");
  for (int i = 0; i < max_iter && hi - lo > xtol; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// How far a bisection root can sit from the true root when function values
/// carry absolute noise `value_noise`: the positive solution x of
/// 0.5 curvature x^2 + |slope| x = value_noise. Near a double root the slope
/// vanishes and the uncertainty degrades to sqrt(2 value_noise / curvature).
inline double root_uncertainty(double slope, double curvature, double value_noise) {
  const double a = 0.5 * std::max(curvature, 0.0);
  const double b = std::abs(slope);
  if (a <= 0.0) return b > 0.0 ? value_noise / b : std::sqrt(value_noise);
  return (-b + std::sqrt(b * b + 4.0 * a * value_noise)) / (2.0 * a);
}

/// Golden-section minimizer of a unimodal function on [lo, hi].
/// Returns the abscissa of the minimum to within xtol.
template <typename F>
[[nodiscard]] double golden_section_min(F&& f, double lo, double hi, double xtol = 1e-12,
                                        int max_iter = 400) {
  constexpr double invphi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < max_iter && b - a > xtol; ++i) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(x2);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace newton_incl
