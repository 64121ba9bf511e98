// newton-incl - Newton's method for nonlinear inclusion problems over product cones
// Licensed under Apache 2.0

#include "newton_incl/problem.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace newton_incl {

struct PolyExpr::Node {
  Kind kind;
  double value{0.0};
  int index{0};
  int exponent{0};
  std::shared_ptr<const Node> a;
  std::shared_ptr<const Node> b;
};

namespace {

using Node = PolyExpr::Kind;

// Dense univariate polynomial helpers for coefficients_along.
using Poly = std::vector<double>;

Poly poly_add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

Poly poly_pow(Poly base, int k) {
  Poly r{1.0};
  while (k > 0) {
    if (k & 1) r = poly_mul(r, base);
    k >>= 1;
    if (k > 0) base = poly_mul(base, base);
  }
  return r;
}

}  // namespace

PolyExpr PolyExpr::constant(double c) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::constant;
  n->value = c;
  return PolyExpr(std::move(n));
}

PolyExpr PolyExpr::variable(int index) {
  if (index < 0) throw std::invalid_argument("PolyExpr::variable: negative index");
  auto n = std::make_shared<Node>();
  n->kind = Kind::variable;
  n->index = index;
  return PolyExpr(std::move(n));
}

PolyExpr operator+(const PolyExpr& a, const PolyExpr& b) {
  // light constant folding keeps derivative trees small
  if (a.kind() == PolyExpr::Kind::constant && b.kind() == PolyExpr::Kind::constant)
    return PolyExpr::constant(a.constant_value() + b.constant_value());
  if (a.kind() == PolyExpr::Kind::constant && a.constant_value() == 0.0) return b;
  if (b.kind() == PolyExpr::Kind::constant && b.constant_value() == 0.0) return a;
  auto n = std::make_shared<PolyExpr::Node>();
  n->kind = PolyExpr::Kind::add;
  n->a = a.node_;
  n->b = b.node_;
  return PolyExpr(std::move(n));
}

PolyExpr operator*(const PolyExpr& a, const PolyExpr& b) {
  if (a.kind() == PolyExpr::Kind::constant && b.kind() == PolyExpr::Kind::constant)
    return PolyExpr::constant(a.constant_value() * b.constant_value());
  if (a.kind() == PolyExpr::Kind::constant) {
    if (a.constant_value() == 0.0) return PolyExpr::constant(0.0);
    if (a.constant_value() == 1.0) return b;
  }
  if (b.kind() == PolyExpr::Kind::constant) {
    if (b.constant_value() == 0.0) return PolyExpr::constant(0.0);
    if (b.constant_value() == 1.0) return a;
  }
  auto n = std::make_shared<PolyExpr::Node>();
  n->kind = PolyExpr::Kind::multiply;
  n->a = a.node_;
  n->b = b.node_;
  return PolyExpr(std::move(n));
}

PolyExpr operator-(const PolyExpr& a) {
  if (a.kind() == PolyExpr::Kind::constant) return PolyExpr::constant(-a.constant_value());
  auto n = std::make_shared<PolyExpr::Node>();
  n->kind = PolyExpr::Kind::negate;
  n->a = a.node_;
  return PolyExpr(std::move(n));
}

PolyExpr PolyExpr::pow(int k) const {
  if (k < 0) throw std::invalid_argument("PolyExpr::pow: exponent must be >= 0");
  if (k == 0) return constant(1.0);
  if (k == 1) return *this;
  if (kind() == Kind::constant) return constant(std::pow(constant_value(), k));
  auto n = std::make_shared<Node>();
  n->kind = Kind::power;
  n->a = node_;
  n->exponent = k;
  return PolyExpr(std::move(n));
}

double PolyExpr::eval(const Eigen::VectorXd& x) const {
  switch (node_->kind) {
    case Kind::constant: return node_->value;
    case Kind::variable:
      if (node_->index >= x.size())
        throw std::invalid_argument("PolyExpr::eval: variable index out of range");
      return x[node_->index];
    case Kind::add: return PolyExpr(node_->a).eval(x) + PolyExpr(node_->b).eval(x);
    case Kind::negate: return -PolyExpr(node_->a).eval(x);
    case Kind::multiply: return PolyExpr(node_->a).eval(x) * PolyExpr(node_->b).eval(x);
    case Kind::power: return std::pow(PolyExpr(node_->a).eval(x), node_->exponent);
  }
  throw std::logic_error("PolyExpr::eval: corrupt node");
}

PolyExpr PolyExpr::derivative(int var) const {
  switch (node_->kind) {
    case Kind::constant: return constant(0.0);
    case Kind::variable: return constant(node_->index == var ? 1.0 : 0.0);
    case Kind::add: return PolyExpr(node_->a).derivative(var) + PolyExpr(node_->b).derivative(var);
    case Kind::negate: return -PolyExpr(node_->a).derivative(var);
    case Kind::multiply: {
      const PolyExpr a(node_->a), b(node_->b);
      return a.derivative(var) * b + a * b.derivative(var);
    }
    case Kind::power: {
      const PolyExpr a(node_->a);
      const int k = node_->exponent;
      return constant(static_cast<double>(k)) * a.pow(k - 1) * a.derivative(var);
    }
  }
  throw std::logic_error("PolyExpr::derivative: corrupt node");
}

int PolyExpr::degree() const {
  switch (node_->kind) {
    case Kind::constant: return 0;
    case Kind::variable: return 1;
    case Kind::add: return std::max(PolyExpr(node_->a).degree(), PolyExpr(node_->b).degree());
    case Kind::negate: return PolyExpr(node_->a).degree();
    case Kind::multiply: return PolyExpr(node_->a).degree() + PolyExpr(node_->b).degree();
    case Kind::power: return PolyExpr(node_->a).degree() * node_->exponent;
  }
  throw std::logic_error("PolyExpr::degree: corrupt node");
}

int PolyExpr::max_var_index() const {
  switch (node_->kind) {
    case Kind::constant: return -1;
    case Kind::variable: return node_->index;
    case Kind::add:
    case Kind::multiply:
      return std::max(PolyExpr(node_->a).max_var_index(), PolyExpr(node_->b).max_var_index());
    case Kind::negate:
    case Kind::power: return PolyExpr(node_->a).max_var_index();
  }
  throw std::logic_error("PolyExpr::max_var_index: corrupt node");
}

int PolyExpr::depth() const {
  switch (node_->kind) {
    case Kind::constant:
    case Kind::variable: return 1;
    case Kind::add:
    case Kind::multiply:
      return 1 + std::max(PolyExpr(node_->a).depth(), PolyExpr(node_->b).depth());
    case Kind::negate:
    case Kind::power: return 1 + PolyExpr(node_->a).depth();
  }
  throw std::logic_error("PolyExpr::depth: corrupt node");
}

namespace {
Poly coeffs_rec(const PolyExpr& e, const Eigen::VectorXd& x, const Eigen::VectorXd& v);
}

Eigen::VectorXd PolyExpr::coefficients_along(const Eigen::VectorXd& x,
                                             const Eigen::VectorXd& v) const {
  if (x.size() != v.size())
    throw std::invalid_argument("coefficients_along: x and v sizes differ");
  const Poly c = coeffs_rec(*this, x, v);
  Eigen::VectorXd out(static_cast<Eigen::Index>(c.size()));
  for (std::size_t i = 0; i < c.size(); ++i) out[static_cast<Eigen::Index>(i)] = c[i];
  return out;
}

namespace {
Poly coeffs_rec(const PolyExpr& e, const Eigen::VectorXd& x, const Eigen::VectorXd& v) {
  switch (e.kind()) {
    case PolyExpr::Kind::constant: return {e.constant_value()};
    case PolyExpr::Kind::variable: {
      const int i = e.variable_index();
      if (i >= x.size())
        throw std::invalid_argument("coefficients_along: variable index out of range");
      return {x[i], v[i]};
    }
    case PolyExpr::Kind::add: return poly_add(coeffs_rec(e.lhs(), x, v), coeffs_rec(e.rhs(), x, v));
    case PolyExpr::Kind::negate: {
      Poly a = coeffs_rec(e.lhs(), x, v);
      for (auto& c : a) c = -c;
      return a;
    }
    case PolyExpr::Kind::multiply:
      return poly_mul(coeffs_rec(e.lhs(), x, v), coeffs_rec(e.rhs(), x, v));
    case PolyExpr::Kind::power: return poly_pow(coeffs_rec(e.lhs(), x, v), e.exponent());
  }
  throw std::logic_error("coefficients_along: corrupt node");
}
}  // namespace

PolyExpr::Kind PolyExpr::kind() const { return node_->kind; }
double PolyExpr::constant_value() const { return node_->value; }
int PolyExpr::variable_index() const { return node_->index; }
int PolyExpr::exponent() const { return node_->exponent; }
PolyExpr PolyExpr::lhs() const { return PolyExpr(node_->a); }
PolyExpr PolyExpr::rhs() const { return PolyExpr(node_->b); }

InclusionProblem::InclusionProblem(std::string name, int n, ProductCone cone,
                                   std::vector<PolyExpr> components, Eigen::VectorXd x_tilde,
                                   double radius, ExpectedValues expected)
    : name_(std::move(name)),
      n_(n),
      cone_(cone),
      components_(std::move(components)),
      x_tilde_(std::move(x_tilde)),
      radius_(radius),
      expected_(std::move(expected)),
      degree_(0) {
  if (n_ < 1) throw std::invalid_argument("InclusionProblem: n must be >= 1");
  if (static_cast<Eigen::Index>(components_.size()) != cone_.dim())
    throw std::invalid_argument("InclusionProblem: F has " + std::to_string(components_.size()) +
                                " components but cone dimension p + q = " +
                                std::to_string(cone_.dim()));
  if (x_tilde_.size() != n_)
    throw std::invalid_argument("InclusionProblem: x_tilde length does not match n");
  if (!x_tilde_.allFinite()) throw std::invalid_argument("InclusionProblem: x_tilde not finite");
  if (!(radius_ > 0.0)) throw std::invalid_argument("InclusionProblem: R must be > 0");
  for (std::size_t r = 0; r < components_.size(); ++r) {
    if (components_[r].max_var_index() >= n_)
      throw std::invalid_argument("InclusionProblem: component " + std::to_string(r) +
                                  " references a variable index >= n");
    if (components_[r].depth() > 64)
      throw std::invalid_argument("InclusionProblem: component " + std::to_string(r) +
                                  " exceeds maximum expression depth 64");
    degree_ = std::max(degree_, components_[r].degree());
  }
  jacobian_.resize(components_.size());
  for (std::size_t r = 0; r < components_.size(); ++r) {
    jacobian_[r].reserve(static_cast<std::size_t>(n_));
    for (int c = 0; c < n_; ++c) jacobian_[r].push_back(components_[r].derivative(c));
  }
}

void InclusionProblem::check_point(const Eigen::VectorXd& x) const {
  if (x.size() != n_)
    throw std::invalid_argument("InclusionProblem: point has wrong dimension");
  if (!x.allFinite()) throw std::invalid_argument("InclusionProblem: point not finite");
}

Eigen::VectorXd InclusionProblem::eval(const Eigen::VectorXd& x) const {
  check_point(x);
  Eigen::VectorXd out(cone_.dim());
  for (std::size_t r = 0; r < components_.size(); ++r)
    out[static_cast<Eigen::Index>(r)] = components_[r].eval(x);
  return out;
}

Eigen::MatrixXd InclusionProblem::jacobian(const Eigen::VectorXd& x) const {
  check_point(x);
  Eigen::MatrixXd out(cone_.dim(), n_);
  for (std::size_t r = 0; r < components_.size(); ++r)
    for (int c = 0; c < n_; ++c)
      out(static_cast<Eigen::Index>(r), c) = jacobian_[r][static_cast<std::size_t>(c)].eval(x);
  return out;
}

std::vector<Eigen::VectorXd> InclusionProblem::taylor_along(const Eigen::VectorXd& x,
                                                            const Eigen::VectorXd& v,
                                                            int order) const {
  check_point(x);
  if (v.size() != n_) throw std::invalid_argument("taylor_along: direction has wrong dimension");
  if (order < 0) throw std::invalid_argument("taylor_along: order must be >= 0");
  std::vector<Eigen::VectorXd> out(static_cast<std::size_t>(order) + 1,
                                   Eigen::VectorXd::Zero(cone_.dim()));
  for (std::size_t r = 0; r < components_.size(); ++r) {
    const Eigen::VectorXd c = components_[r].coefficients_along(x, v);
    for (int k = 0; k <= order && k < c.size(); ++k)
      out[static_cast<std::size_t>(k)][static_cast<Eigen::Index>(r)] = c[k];
  }
  return out;
}

}  // namespace newton_incl
