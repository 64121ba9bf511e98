// newton-incl - Newton's method for nonlinear inclusion problems over product cones
// Licensed under Apache 2.0

#pragma once

#include <Eigen/Core>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "newton_incl/cone.hpp"

namespace newton_incl {

/// Immutable polynomial expression tree over variables x_0 .. x_{n-1}.
/// Node kinds: constant, variable, add, negate, multiply, integer power.
/// Trees share subexpressions by reference and are safe to copy and to read
/// from any number of threads.
class PolyExpr {
 public:
  enum class Kind { constant, variable, add, negate, multiply, power };

  PolyExpr() : PolyExpr(constant(0.0)) {}

  static PolyExpr constant(double c);
  static PolyExpr variable(int index);

  friend PolyExpr operator+(const PolyExpr& a, const PolyExpr& b);
  friend PolyExpr operator*(const PolyExpr& a, const PolyExpr& b);
  friend PolyExpr operator-(const PolyExpr& a);
  friend PolyExpr operator-(const PolyExpr& a, const PolyExpr& b) { return a + (-b); }
  /// Integer power, k >= 0.
  [[nodiscard]] PolyExpr pow(int k) const;

  [[nodiscard]] double eval(const Eigen::VectorXd& x) const;
  /// Exact symbolic partial derivative with respect to variable `var`.
  [[nodiscard]] PolyExpr derivative(int var) const;
  /// Upper bound on the total degree (no cancellation detection).
  [[nodiscard]] int degree() const;
  [[nodiscard]] int max_var_index() const;  // -1 for constants
  [[nodiscard]] int depth() const;

  /// Coefficients of the univariate polynomial tau -> eval(x + tau v).
  /// Coefficient k equals the k-th directional derivative along v over k!.
  [[nodiscard]] Eigen::VectorXd coefficients_along(const Eigen::VectorXd& x,
                                                   const Eigen::VectorXd& v) const;

  // Introspection for serialization.
  [[nodiscard]] Kind kind() const;
  [[nodiscard]] double constant_value() const;
  [[nodiscard]] int variable_index() const;
  [[nodiscard]] int exponent() const;
  [[nodiscard]] PolyExpr lhs() const;  // add/multiply left operand, negate/power child
  [[nodiscard]] PolyExpr rhs() const;  // add/multiply right operand

 private:
  struct Node;
  explicit PolyExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct ExpectedValues {
  std::optional<double> lipschitz;  // exact L on the problem ball, when known
  std::optional<double> gamma;      // analytic gamma at the base point
  std::optional<double> b;          // first-step norm at the base point
  std::optional<Eigen::VectorXd> solution;

  [[nodiscard]] bool empty() const {
    return !lipschitz && !gamma && !b && !solution;
  }
};

/// A polynomial inclusion problem: find x with F(x) in C, posed on the ball
/// B(x_tilde, radius). Components 0..p-1 of F are constrained nonpositive,
/// components p..p+q-1 to zero. Immutable after construction; the Jacobian is
/// differentiated symbolically once up front.
class InclusionProblem {
 public:
  InclusionProblem(std::string name, int n, ProductCone cone, std::vector<PolyExpr> components,
                   Eigen::VectorXd x_tilde, double radius, ExpectedValues expected = {});

  [[nodiscard]] Eigen::VectorXd eval(const Eigen::VectorXd& x) const;
  [[nodiscard]] Eigen::MatrixXd jacobian(const Eigen::VectorXd& x) const;

  /// Taylor coefficients of tau -> F(x + tau v): result[k] is the m-vector of
  /// k-th coefficients, k = 0..order. Orders past the degree are zero.
  [[nodiscard]] std::vector<Eigen::VectorXd> taylor_along(const Eigen::VectorXd& x,
                                                          const Eigen::VectorXd& v,
                                                          int order) const;

  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] int dim_in() const { return n_; }
  [[nodiscard]] const ProductCone& cone() const { return cone_; }
  [[nodiscard]] const std::vector<PolyExpr>& components() const { return components_; }
  [[nodiscard]] const Eigen::VectorXd& x_tilde() const { return x_tilde_; }
  [[nodiscard]] double radius() const { return radius_; }
  [[nodiscard]] const ExpectedValues& expected() const { return expected_; }
  [[nodiscard]] int degree() const { return degree_; }

 private:
  void check_point(const Eigen::VectorXd& x) const;

  std::string name_;
  int n_;
  ProductCone cone_;
  std::vector<PolyExpr> components_;
  std::vector<std::vector<PolyExpr>> jacobian_;  // [row][col]
  Eigen::VectorXd x_tilde_;
  double radius_;
  ExpectedValues expected_;
  int degree_;
};

}  // namespace newton_incl
