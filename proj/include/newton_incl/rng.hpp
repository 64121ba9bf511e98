// newton-incl - Newton's method for nonlinear inclusion problems over product cones
// Licensed under Apache 2.0

#pragma once

#include <Eigen/Core>
#include <cmath>
#include <cstdint>

namespace newton_incl {

/// Deterministic sampler (splitmix64). Results depend only on (seed, stream),
/// not on the standard library, so sweeps can be resumed or parallelized
/// per-sample and reduced order-independently.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed, std::uint64_t stream = 0)
      : state_(seed ^ (0x9E3779B97F4A7C15ULL * (stream + 1))) {
    next_u64();  // decorrelate nearby streams
    next_u64();
  }

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller.
  double normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

  /// Uniform direction on the unit sphere in R^n.
  Eigen::VectorXd unit_vector(Eigen::Index n) {
    Eigen::VectorXd v(n);
    double nrm = 0.0;
    do {
      for (Eigen::Index i = 0; i < n; ++i) v[i] = normal();
      nrm = v.norm();
    } while (nrm < 1e-12);
    return v / nrm;
  }

  /// Uniform sample from the open ball B(center, radius).
  Eigen::VectorXd in_ball(const Eigen::VectorXd& center, double radius) {
    const Eigen::Index n = center.size();
    const double r = radius * std::pow(uniform(), 1.0 / static_cast<double>(n));
    return center + r * unit_vector(n);
  }

 private:
  std::uint64_t state_;
};

}  // namespace newton_incl
