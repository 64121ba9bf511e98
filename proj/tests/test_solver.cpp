// newton-incl - Newton's method for nonlinear inclusion problems over product cones
// Licensed under Apache 2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "newton_incl/catalog.hpp"
#include "newton_incl/certify.hpp"
#include "newton_incl/rng.hpp"
#include "newton_incl/solver.hpp"

using namespace newton_incl;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {
VectorXd vec(std::initializer_list<double> v) {
  VectorXd x(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double e : v) x[i++] = e;
  return x;
}

InclusionProblem scaled_problem(const InclusionProblem& p, const VectorXd& scales) {
  std::vector<PolyExpr> comps;
  for (std::size_t i = 0; i < p.components().size(); ++i)
    comps.push_back(PolyExpr::constant(scales[static_cast<Eigen::Index>(i)]) * p.components()[i]);
  return InclusionProblem(p.name() + "-scaled", p.dim_in(), p.cone(), comps, p.x_tilde(),
                          p.radius(), p.expected());
}
}  // namespace

TEST_CASE("sqrt2 follows the classical scalar iteration") {
  const InclusionProblem p = catalog_problem("sqrt2");
  SolveConfig cfg;
  cfg.residual_tol = 1e-12;
  const SolveTrace tr = newton_solve(p, vec({1.5}), cfg);
  CHECK(tr.status == SolveStatus::converged_residual);

  // independent oracle: textbook Newton on x^2 - 2
  std::vector<double> oracle{1.5};
  while (std::abs(oracle.back() * oracle.back() - 2.0) > 1e-12)
    oracle.push_back(oracle.back() - (oracle.back() * oracle.back() - 2.0) / (2.0 * oracle.back()));
  REQUIRE(tr.iterates.size() == oracle.size());
  for (std::size_t k = 0; k < oracle.size(); ++k)
    CHECK(tr.iterates[k][0] == doctest::Approx(oracle[k]).epsilon(1e-12));
  CHECK(tr.iterates[1][0] == doctest::Approx(1.5 - 0.25 / 3.0).epsilon(1e-15));
  CHECK(std::abs(tr.iterates.back()[0] - std::sqrt(2.0)) < 1e-9);
  CHECK(tr.residuals.back() <= 1e-12);
  CHECK(tr.steps() <= 5);
}

TEST_CASE("feasible start converges with zero steps") {
  const InclusionProblem p = catalog_problem("sqrt2");
  const SolveTrace tr = newton_solve(p, vec({std::sqrt(2.0)}));
  CHECK(tr.status == SolveStatus::converged_residual);
  CHECK(tr.steps() == 0);
  CHECK(tr.iterates.size() == 1);
}

TEST_CASE("affine problems land exactly in one step") {
  const InclusionProblem p = catalog_problem("ineq-line");
  const SolveTrace tr = newton_solve(p, p.x_tilde());
  CHECK(tr.status == SolveStatus::converged_residual);
  CHECK(tr.steps() == 1);
  CHECK(tr.iterates.back().isApprox(vec({0.5, 0.5}), 1e-12));
  CHECK(tr.residuals.back() == 0.0);
}

TEST_CASE("degenerate cone reduces to textbook Newton") {
  const InclusionProblem p = catalog_problem("system-2x2");
  SolveConfig cfg;
  cfg.residual_tol = 1e-13;
  const SolveTrace tr = newton_solve(p, p.x_tilde(), cfg);
  CHECK(tr.status == SolveStatus::converged_residual);

  VectorXd x = p.x_tilde();
  for (int k = 0; k < tr.steps(); ++k) {
    const VectorXd d = p.jacobian(x).partialPivLu().solve(-p.eval(x));
    // per-step match against the direct linear solve
    CHECK((tr.iterates[static_cast<std::size_t>(k + 1)] - (x + d)).norm() <=
          1e-10 * std::max(1.0, x.norm()));
    x += d;
  }
  CHECK((tr.iterates.back() - *p.expected().solution).norm() < 1e-10);
}

TEST_CASE("solver statuses") {
  SUBCASE("max_iter on a rootless equation") {
    // x^3 - 2x + 2 = 0 from 0 cycles between 0 and 1
    const PolyExpr x = PolyExpr::variable(0);
    const InclusionProblem p("cycle", 1, ProductCone(0, 1),
                             {x.pow(3) - PolyExpr::constant(2.0) * x + PolyExpr::constant(2.0)},
                             vec({0.0}), 10.0);
    SolveConfig cfg;
    cfg.max_iter = 12;
    const SolveTrace tr = newton_solve(p, vec({0.0}), cfg);
    CHECK(tr.status == SolveStatus::max_iter);
    CHECK(tr.steps() == 12);
  }
  SUBCASE("step_failure where the jacobian vanishes") {
    const PolyExpr x = PolyExpr::variable(0);
    const InclusionProblem p("flat", 1, ProductCone(0, 1),
                             {x.pow(2) - PolyExpr::constant(2.0) * x + PolyExpr::constant(2.0)},
                             vec({1.0}), 10.0);
    const SolveTrace tr = newton_solve(p, vec({1.0}));
    CHECK(tr.status == SolveStatus::step_failure);
    CHECK(!tr.diagnostic.empty());
  }
  SUBCASE("step tolerance stop") {
    const InclusionProblem p = catalog_problem("sqrt2");
    SolveConfig cfg;
    cfg.residual_tol = 0.0;  // force the step-based exit
    cfg.step_tol = 1e-6;
    const SolveTrace tr = newton_solve(p, vec({1.5}), cfg);
    CHECK(tr.status == SolveStatus::converged_step);
    CHECK(tr.step_norms.back() <= 1e-6);
  }
  SUBCASE("start outside the declared ball is flagged") {
    const InclusionProblem p = catalog_problem("sqrt2");
    const SolveTrace tr = newton_solve(p, vec({100.0}));
    CHECK_FALSE(tr.start_in_domain);
  }
}

TEST_CASE("divergence guard does not disturb converging runs") {
  for (const char* name : {"sqrt2", "cubic", "ineq-circle", "mixed-3"}) {
    const InclusionProblem p = catalog_problem(name);
    SolveConfig on, off;
    off.divergence_guard = false;
    const SolveTrace a = newton_solve(p, p.x_tilde(), on);
    const SolveTrace b = newton_solve(p, p.x_tilde(), off);
    REQUIRE(a.iterates.size() == b.iterates.size());
    for (std::size_t k = 0; k < a.iterates.size(); ++k)
      CHECK((a.iterates[k] - b.iterates[k]).norm() == 0.0);
  }
}

TEST_CASE("iterates stay inside positive diagonal rescaling") {
  SampleRng rng(6, 0);
  for (const auto& p : catalog()) {
    VectorXd scales(p.cone().dim());
    for (Eigen::Index i = 0; i < scales.size(); ++i) scales[i] = rng.uniform(0.2, 5.0);
    const InclusionProblem q = scaled_problem(p, scales);
    SolveConfig cfg;
    cfg.max_iter = 8;
    cfg.residual_tol = 0.0;
    cfg.step_tol = 0.0;
    cfg.divergence_guard = false;
    const SolveTrace a = newton_solve(p, p.x_tilde(), cfg);
    const SolveTrace b = newton_solve(q, q.x_tilde(), cfg);
    REQUIRE(a.iterates.size() == b.iterates.size());
    for (std::size_t k = 0; k < a.iterates.size(); ++k)
      CHECK((a.iterates[k] - b.iterates[k]).lpNorm<Eigen::Infinity>() <=
            1e-9 * std::max(1.0, a.iterates[k].lpNorm<Eigen::Infinity>()));
  }
}

TEST_CASE("certified runs respect the majorant bounds") {
  const InclusionProblem p = catalog_problem("sqrt2");
  SolveConfig cfg;
  cfg.residual_tol = 1e-12;
  const SolveTrace tr = newton_solve(p, p.x_tilde(), cfg);

  SUBCASE("smale certificate: every inequality holds") {
    const Certificate cert = smale_certificate(1.0 / 3.0, compute_b(p));
    const MajorantTrace mt = majorant_sequence(cert.spec());
    const VerificationReport rep = verify_majorant_bounds(tr, mt, cert.rate_constant);
    CHECK(rep.all_ok);
    REQUIRE(rep.steps.size() == static_cast<std::size_t>(tr.steps()));
    CHECK(rep.steps[0].step_le_gap.lhs ==
          doctest::Approx(rep.steps[0].step_le_gap.rhs).epsilon(1e-12));  // b equals step 1
    for (const auto& row : rep.steps) {
      CHECK(row.step_le_gap.ok);
      if (row.ratio_bound) CHECK(row.ratio_bound->ok);
      if (row.rate_bound) CHECK(row.rate_bound->ok);
    }
    // containment in the certified ball
    for (const auto& xk : tr.iterates)
      CHECK((xk - p.x_tilde()).norm() < cert.t_star + 1e-9);
  }

  SUBCASE("an undersized L is flagged") {
    const Certificate lie = kantorovich_certificate(0.01, compute_b(p));
    REQUIRE(lie.hypothesis_ok);
    const MajorantTrace mt = majorant_sequence(lie.spec());
    const VerificationReport rep = verify_majorant_bounds(tr, mt, lie.rate_constant);
    CHECK_FALSE(rep.all_ok);
    bool some_violation = false;
    for (const auto& row : rep.steps) some_violation |= !row.step_le_gap.ok;
    CHECK(some_violation);
  }

  SUBCASE("bound records attach to the trace") {
    const Certificate cert = smale_certificate(1.0 / 3.0, compute_b(p));
    const MajorantTrace mt = majorant_sequence(cert.spec());
    const VerificationReport rep = verify_majorant_bounds(tr, mt, cert.rate_constant);
    SolveTrace copy = tr;
    attach_bound_checks(copy, rep);
    REQUIRE(copy.bound_checks.size() == static_cast<std::size_t>(tr.steps()));
    CHECK(copy.bound_checks[0].step_le_gap);
  }
}

TEST_CASE("certified runs stay inside the certified ball") {
  // both families on the cubic problem, where the radius is nearly tight
  const InclusionProblem p = catalog_problem("cubic");
  const double b = compute_b(p);
  SolveConfig cfg;
  cfg.residual_tol = 1e-13;
  const SolveTrace tr = newton_solve(p, p.x_tilde(), cfg);
  REQUIRE(tr.status == SolveStatus::converged_residual);
  for (const Certificate& cert :
       {kantorovich_certificate(*p.expected().lipschitz, b, ParamProvenance::exact),
        smale_certificate(*p.expected().gamma, b, ParamProvenance::exact)}) {
    REQUIRE(cert.strict_ok);
    for (const auto& xk : tr.iterates)
      CHECK((xk - p.x_tilde()).norm() < cert.t_star + 1e-9);
    const VerificationReport rep =
        verify_majorant_bounds(tr, majorant_sequence(cert.spec()), cert.rate_constant);
    CHECK(rep.all_ok);
  }
}

TEST_CASE("region membership check") {
  const InclusionProblem p = catalog_problem("sqrt2");
  const double b = compute_b(p);
  const MajorantSpec m = MajorantSpec::smale(1.0 / 3.0, b);

  // at the base point with t = 0: the first step norm equals b = -f(0)/f'(0)
  const RegionCheck at_base = region_K_check(p, p.x_tilde(), 0.0, m);
  CHECK(at_base.in_region);

  // outside the radius
  const RegionCheck far = region_K_check(p, vec({1.4}), 0.05, m);
  CHECK_FALSE(far.radius_ok);
  CHECK_FALSE(far.in_region);

  // one Newton step later, membership at t = n_f(0) holds
  const SolveTrace tr = newton_solve(p, p.x_tilde());
  const double t1 = newton_iterate(m, 0.0);
  const RegionCheck after = region_K_check(p, tr.iterates[1], t1, m);
  CHECK(after.in_region);

  CHECK_THROWS_AS((void)region_K_check(p, p.x_tilde(), smallest_zero(m) * 1.001, m), std::domain_error);
}
