// newton-incl - Newton's method for nonlinear inclusion problems over product cones
// Licensed under Apache 2.0

#pragma once

#include <Eigen/Core>
#include <cmath>
#include <stdexcept>
#include <string>

namespace newton_incl {

/// Closed convex cone C = R^p_- x {0}^q. The first p components of a vector
/// are constrained nonpositive, the remaining q are constrained to zero.
/// p = 0 gives the degenerate cone {0}, i.e. a plain system of equations;
/// q = 0 gives a pure system of inequalities.
struct ProductCone {
  Eigen::Index p{0};
  Eigen::Index q{1};

  ProductCone() = default;
  ProductCone(Eigen::Index p_, Eigen::Index q_) : p(p_), q(q_) {
    if (p < 0 || q < 0 || p + q < 1)
      throw std::invalid_argument("ProductCone: need p >= 0, q >= 0, p + q >= 1");
  }

  [[nodiscard]] Eigen::Index dim() const { return p + q; }
};

namespace detail {
inline void check_cone_dim(const ProductCone& cone, Eigen::Index size) {
  if (size != cone.dim())
    throw std::invalid_argument("cone: vector of length " + std::to_string(size) +
                                " does not match cone dimension " + std::to_string(cone.dim()));
}
}  // namespace detail

/// Membership test with absolute tolerance tol >= 0.
template <typename Derived>
[[nodiscard]] bool contains(const ProductCone& cone, const Eigen::MatrixBase<Derived>& v,
                            typename Derived::Scalar tol) {
  detail::check_cone_dim(cone, v.size());
  for (Eigen::Index i = 0; i < cone.p; ++i)
    if (v[i] > tol) return false;
  for (Eigen::Index i = cone.p; i < cone.dim(); ++i)
    if (std::abs(v[i]) > tol) return false;
  return true;
}

/// v - proj_C(v): positive part on the inequality block, identity on the
/// equality block. Its Euclidean norm equals the distance d(0, v - C).
template <typename Derived>
[[nodiscard]] Eigen::Vector<typename Derived::Scalar, Eigen::Dynamic> residual(
    const ProductCone& cone, const Eigen::MatrixBase<Derived>& v) {
  using Scalar = typename Derived::Scalar;
  detail::check_cone_dim(cone, v.size());
  Eigen::Vector<Scalar, Eigen::Dynamic> r(v.size());
  for (Eigen::Index i = 0; i < cone.dim(); ++i)
    r[i] = (i < cone.p) ? std::max(v[i], Scalar(0)) : v[i];
  return r;
}

/// d(0, v - C); zero exactly when v lies in the cone.
template <typename Derived>
[[nodiscard]] typename Derived::Scalar distance_to_cone(const ProductCone& cone,
                                                        const Eigen::MatrixBase<Derived>& v) {
  return residual(cone, v).norm();
}

}  // namespace newton_incl
