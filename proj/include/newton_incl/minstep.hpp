// newton-incl - Newton's method for nonlinear inclusion problems over product cones
// Licensed under Apache 2.0

#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <string>
#include <vector>

#include "newton_incl/cone.hpp"

namespace newton_incl {

/// Linearization of the inclusion at a point: find d with value + jacobian d in C.
/// Rows 0..p-1 are the inequality block, rows p..p+q-1 the equality block.
struct LinearInclusionSubproblem {
  Eigen::MatrixXd jacobian;  // m x n
  Eigen::VectorXd value;     // m
  ProductCone cone;
};

/// The unique minimum-Euclidean-norm solution of the linearized inclusion,
/// with Lagrange multipliers of
///   min 1/2 ||d||^2  s.t.  J_I d + F_I <= 0,  J_E d + F_E = 0.
/// Stationarity reads d + J_I^T lambda + J_E^T mu = 0 with lambda >= 0 and
/// complementary slackness on the inequality rows.
struct NewtonStep {
  Eigen::VectorXd d;
  double norm_d{0.0};
  std::vector<Eigen::Index> active_set;  // inequality rows tight at the solution
  Eigen::VectorXd multipliers;           // length m; >= 0 on inequality rows
  double feasibility_residual{0.0};      // d(0, value + jacobian d - C)
};

/// Thrown when the linearized inclusion has no solution. `certificate` is a
/// separating (Farkas) multiplier y, nonnegative on the inequality rows, with
/// jacobian^T y ~ 0 and value^T y > 0: no d can satisfy the constraints.
class InfeasibleSubproblem : public std::runtime_error {
 public:
  InfeasibleSubproblem(const std::string& msg, Eigen::VectorXd cert)
      : std::runtime_error(msg), certificate(std::move(cert)) {}
  Eigen::VectorXd certificate;
};

/// Exact least-norm step. Solves the reduced least-distance problem by the
/// Lawson-Hanson NNLS transformation after eliminating the equality block,
/// then polishes on the identified active set. Deterministic: ties in the
/// active-set pivoting are broken by lowest index. Iteration cap 50 (n + m).
[[nodiscard]] NewtonStep min_norm_step(const LinearInclusionSubproblem& sub,
                                       double feas_tol = 1e-10, double opt_tol = 1e-10);

/// min { ||d|| : jacobian d - w in C }, the norm of the sublinear inverse image
/// of w. Returns +infinity when the constraint set is empty (never throws for
/// infeasibility; bad data still raises invalid_argument).
[[nodiscard]] double sublinear_image_norm(const Eigen::MatrixXd& jacobian, const ProductCone& cone,
                                          const Eigen::VectorXd& w);

}  // namespace newton_incl
