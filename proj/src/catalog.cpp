// newton-incl - Newton's method for nonlinear inclusion problems over product cones
// Licensed under Apache 2.0

#include "newton_incl/catalog.hpp"

#include <cmath>
#include <stdexcept>

namespace newton_incl {

namespace {

Eigen::VectorXd vec(std::initializer_list<double> v) {
  Eigen::VectorXd x(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double e : v) x[i++] = e;
  return x;
}

}  // namespace

std::vector<InclusionProblem> catalog() {
  std::vector<InclusionProblem> out;
  const PolyExpr x0 = PolyExpr::variable(0);
  const PolyExpr x1 = PolyExpr::variable(1);
  const PolyExpr x2 = PolyExpr::variable(2);
  const auto c = [](double v) { return PolyExpr::constant(v); };

  {
    // F(x) = x^2 - 2 on B(1.5, 0.5). With F'(1.5) = 3:
    //   L = sup |F''| / |F'(1.5)| = 2/3 (constant ratio), gamma = |F''/2| / 3 = 1/3,
    //   b = |F(1.5)| / 3 = 1/12.
    ExpectedValues e;
    e.lipschitz = 2.0 / 3.0;
    e.gamma = 1.0 / 3.0;
    e.b = 1.0 / 12.0;
    e.solution = vec({std::sqrt(2.0)});
    out.emplace_back("sqrt2", 1, ProductCone(0, 1), std::vector<PolyExpr>{x0.pow(2) - c(2.0)},
                     vec({1.5}), 0.5, e);
  }
  {
    // F(x) = x^3 - 2 on B(1.3, 0.3). F'(1.3) = 5.07:
    //   L = 3 sup_{|x-1.3|<0.3} |x + y| / 5.07 = 9.6/5.07 = 320/169,
    //   gamma = max(|3*1.3|/5.07, (6/(6*5.07))^(1/2)) = 3.9/5.07 = 10/13,
    //   b = 0.197/5.07.
    ExpectedValues e;
    e.lipschitz = 320.0 / 169.0;
    e.gamma = 10.0 / 13.0;
    e.b = 0.197 / 5.07;
    e.solution = vec({std::cbrt(2.0)});
    out.emplace_back("cubic", 1, ProductCone(0, 1), std::vector<PolyExpr>{x0.pow(3) - c(2.0)},
                     vec({1.3}), 0.3, e);
  }
  {
    // Affine: x0 + x1 - 1 <= 0, x0 - x1 = 0. One exact step from (1, 1).
    ExpectedValues e;
    e.lipschitz = 0.0;
    e.gamma = 0.0;
    e.solution = vec({0.5, 0.5});
    out.emplace_back("ineq-line", 2, ProductCone(1, 1),
                     std::vector<PolyExpr>{x0 + x1 - c(1.0), x0 - x1}, vec({1.0, 1.0}), 4.0, e);
  }
  {
    // x0^2 + x1^2 - 1 <= 0 and x0 = x1: converges onto the circle at
    // (1/sqrt(2), 1/sqrt(2)) from the infeasible side.
    ExpectedValues e;
    e.solution = vec({1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)});
    out.emplace_back("ineq-circle", 2, ProductCone(1, 1),
                     std::vector<PolyExpr>{x0.pow(2) + x1.pow(2) - c(1.0), x0 - x1},
                     vec({0.8, 0.7}), 1.0, e);
  }
  {
    // Square system: x0^2 + x1^2 = 4, x0 x1 = 1. Degenerate cone, so every
    // Newton step is the plain linear solve.
    ExpectedValues e;
    e.solution = vec({std::sqrt(2.0 + std::sqrt(3.0)), std::sqrt(2.0 - std::sqrt(3.0))});
    out.emplace_back("system-2x2", 2, ProductCone(0, 2),
                     std::vector<PolyExpr>{x0.pow(2) + x1.pow(2) - c(4.0), x0 * x1 - c(1.0)},
                     vec({1.8, 0.6}), 1.0, e);
  }
  {
    // n=3 with two inequalities and one equality.
    out.emplace_back("mixed-3", 3, ProductCone(2, 1),
                     std::vector<PolyExpr>{x0.pow(2) + x1 - c(1.0), x1.pow(2) + x2 - c(2.0),
                                           x0 + x1 + x2 - c(2.0)},
                     vec({0.9, 0.8, 0.6}), 2.0);
  }
  return out;
}

InclusionProblem catalog_problem(std::string_view name) {
  for (auto& p : catalog())
    if (p.name() == name) return p;
  throw std::invalid_argument("catalog: unknown problem \"" + std::string(name) + "\"");
}

}  // namespace newton_incl
