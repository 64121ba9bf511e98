// newton-incl - Newton's method for nonlinear inclusion problems over product cones
// Licensed under Apache 2.0

#include "newton_incl/minstep.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>

namespace newton_incl {

namespace {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

struct NnlsOutcome {
  VectorXd u;         // >= 0
  VectorXd residual;  // E u - f
};

// Lawson-Hanson NNLS: minimize ||E u - f|| subject to u >= 0.
// Entering index: largest gradient, lowest index on ties. Leaving indices:
// smallest step ratio, lowest index first. Finite termination; `max_iter`
// guards against cycling in floating point.
NnlsOutcome nnls(const MatrixXd& E, const VectorXd& f, int max_iter) {
  const Index ncols = E.cols();
  VectorXd u = VectorXd::Zero(ncols);
  std::vector<bool> passive(static_cast<std::size_t>(ncols), false);
  const double wtol = 1e-12 * std::max(1.0, f.norm());
  int iter = 0;

  while (true) {
    const VectorXd w = E.transpose() * (f - E * u);
    Index enter = -1;
    double best = wtol;
    for (Index j = 0; j < ncols; ++j) {
      if (!passive[static_cast<std::size_t>(j)] && w[j] > best) {
        best = w[j];
        enter = j;
      }
    }
    if (enter < 0) break;
    passive[static_cast<std::size_t>(enter)] = true;

    while (true) {
      if (++iter > max_iter)
        throw std::runtime_error("min_norm_step: active-set iteration cap exceeded");
      std::vector<Index> idx;
      for (Index j = 0; j < ncols; ++j)
        if (passive[static_cast<std::size_t>(j)]) idx.push_back(j);
      MatrixXd Ep(E.rows(), static_cast<Index>(idx.size()));
      for (std::size_t i = 0; i < idx.size(); ++i) Ep.col(static_cast<Index>(i)) = E.col(idx[i]);
      const VectorXd z = Ep.colPivHouseholderQr().solve(f);

      double zmin = std::numeric_limits<double>::infinity();
      for (Index i = 0; i < z.size(); ++i) zmin = std::min(zmin, z[i]);
      if (zmin > 0.0) {
        u.setZero();
        for (std::size_t i = 0; i < idx.size(); ++i) u[idx[i]] = z[static_cast<Index>(i)];
        break;
      }

      double alpha = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < idx.size(); ++i) {
        const double zi = z[static_cast<Index>(i)];
        if (zi <= 0.0) {
          const double ui = u[idx[i]];
          const double denom = ui - zi;
          const double a = denom > 0.0 ? ui / denom : 0.0;
          if (a < alpha) alpha = a;
        }
      }
      for (std::size_t i = 0; i < idx.size(); ++i)
        u[idx[i]] += alpha * (z[static_cast<Index>(i)] - u[idx[i]]);
      for (std::size_t i = 0; i < idx.size(); ++i) {
        const double zi = z[static_cast<Index>(i)];
        if (zi <= 0.0 && u[idx[i]] <= 1e-14 * std::max(1.0, u.lpNorm<Eigen::Infinity>())) {
          u[idx[i]] = 0.0;
          passive[static_cast<std::size_t>(idx[i])] = false;
        }
      }
    }
  }
  return {u, E * u - f};
}

struct LdpOutcome {
  VectorXd y;
  VectorXd lambda;  // >= 0 per inequality row
  bool feasible{true};
  VectorXd farkas;  // when infeasible: u >= 0, A^T u ~ 0, c^T u < 0
};

// minimize ||y|| subject to A y <= c, via the NNLS transformation.
LdpOutcome least_distance(const MatrixXd& A, const VectorXd& c, int max_iter) {
  const Index m = A.rows();
  const Index k = A.cols();
  LdpOutcome out;
  if ((c.array() >= 0.0).all()) {
    out.y = VectorXd::Zero(k);
    out.lambda = VectorXd::Zero(m);
    return out;
  }

  MatrixXd E(k + 1, m);
  E.topRows(k) = -A.transpose();
  E.row(k) = -c.transpose();
  VectorXd colnorm(m);
  for (Index j = 0; j < m; ++j) {
    colnorm[j] = E.col(j).norm();
    if (colnorm[j] <= 0.0) colnorm[j] = 1.0;
    E.col(j) /= colnorm[j];
  }
  const VectorXd f = VectorXd::Unit(k + 1, k);

  const auto res = nnls(E, f, max_iter);
  const VectorXd u = res.u.cwiseQuotient(colnorm);  // unscaled NNLS solution
  const VectorXd& r = res.residual;
  const double rlast = r[k];
  if (r.norm() <= 1e-9 || rlast >= -1e-12) {
    out.feasible = false;
    out.farkas = u;
    return out;
  }
  out.y = -r.head(k) / rlast;
  out.lambda = u / (-rlast);
  return out;
}

// Minimum-norm least-squares solve via SVD, with effective rank reporting.
struct MinNormSolve {
  VectorXd x;
  Index rank{0};
  MatrixXd null_basis;  // orthonormal basis of null(A), n x (n - rank)
};

MinNormSolve min_norm_solve(const MatrixXd& A, const VectorXd& rhs, bool want_null) {
  Eigen::JacobiSVD<MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeFullV);
  const VectorXd& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv[0] : 0.0;
  const double tol = std::max(A.rows(), A.cols()) * 1e-14 * std::max(smax, 1.0);
  Index rank = 0;
  for (Index i = 0; i < sv.size(); ++i)
    if (sv[i] > tol) ++rank;

  MinNormSolve out;
  out.rank = rank;
  const MatrixXd& V = svd.matrixV();
  const MatrixXd& U = svd.matrixU();
  VectorXd coef = VectorXd::Zero(sv.size());
  const VectorXd ur = U.transpose() * rhs;
  for (Index i = 0; i < rank; ++i) coef[i] = ur[i] / sv[i];
  out.x = V.leftCols(sv.size()) * coef;
  if (want_null) out.null_basis = V.rightCols(A.cols() - rank);
  return out;
}

void validate(const LinearInclusionSubproblem& sub) {
  const Index m = sub.cone.dim();
  if (sub.jacobian.rows() != m)
    throw std::invalid_argument("min_norm_step: jacobian has " +
                                std::to_string(sub.jacobian.rows()) + " rows, cone dimension is " +
                                std::to_string(m));
  if (sub.value.size() != m)
    throw std::invalid_argument("min_norm_step: value length does not match cone dimension");
  if (sub.jacobian.cols() < 1)
    throw std::invalid_argument("min_norm_step: jacobian must have at least one column");
  if (!sub.jacobian.allFinite() || !sub.value.allFinite())
    throw std::invalid_argument("min_norm_step: non-finite entries in jacobian or value");
}

}  // namespace

NewtonStep min_norm_step(const LinearInclusionSubproblem& sub, double feas_tol, double opt_tol) {
  validate(sub);
  const Index p = sub.cone.p;
  const Index q = sub.cone.q;
  const Index m = p + q;
  const Index n = sub.jacobian.cols();
  const int cap = 50 * static_cast<int>(n + m);

  const MatrixXd JI = sub.jacobian.topRows(p);
  const VectorXd FI = sub.value.head(p);
  const MatrixXd JE = sub.jacobian.bottomRows(q);
  const VectorXd FE = sub.value.tail(q);

  // Equality block: minimum-norm particular solution d0 plus null-space basis Z.
  VectorXd d0 = VectorXd::Zero(n);
  MatrixXd Z = MatrixXd::Identity(n, n);
  if (q > 0) {
    const auto eq = min_norm_solve(JE, -FE, true);
    d0 = eq.x;
    const VectorXd res = JE * d0 + FE;
    // the cancellation floor J.norm * d0.norm * eps keeps ill-conditioned but
    // consistent systems from being mislabeled infeasible
    const double res_tol = feas_tol * std::max(1.0, FE.norm()) +
                           1e2 * std::numeric_limits<double>::epsilon() *
                               (JE.norm() * d0.norm() + FE.norm());
    if (res.norm() > res_tol) {
      VectorXd cert = VectorXd::Zero(m);
      cert.tail(q) = res / res.norm();
      throw InfeasibleSubproblem("min_norm_step: equality block is inconsistent", cert);
    }
    Z = eq.null_basis;
  }

  // Inequality block on the reduced variable y, d = d0 + Z y.
  VectorXd lambda = VectorXd::Zero(p);
  VectorXd d = d0;
  if (p > 0) {
    const VectorXd cbar = -FI - JI * d0;
    if (Z.cols() == 0) {
      if (!(cbar.array() >= -feas_tol * std::max(1.0, FI.lpNorm<Eigen::Infinity>())).all()) {
        Index worst = 0;
        cbar.minCoeff(&worst);
        VectorXd u = VectorXd::Unit(p, worst);
        VectorXd cert(m);
        cert.head(p) = u;
        if (q > 0) cert.tail(q) = min_norm_solve(JE.transpose(), -(JI.transpose() * u), false).x;
        throw InfeasibleSubproblem("min_norm_step: inequality block infeasible", cert);
      }
    } else {
      const MatrixXd Abar = JI * Z;
      const auto ldp = least_distance(Abar, cbar, cap);
      if (!ldp.feasible) {
        VectorXd cert(m);
        cert.head(p) = ldp.farkas;
        if (q > 0)
          cert.tail(q) =
              min_norm_solve(JE.transpose(), -(JI.transpose() * ldp.farkas), false).x;
        throw InfeasibleSubproblem("min_norm_step: inequality block infeasible", cert);
      }
      lambda = ldp.lambda;
      d = d0 + Z * ldp.y;
    }
  }

  // Active-set polish: re-solve the step as a pure equality problem on the
  // rows carrying positive multipliers. Removes the drift of the NNLS path.
  std::vector<Index> support;
  const double lam_scale = p > 0 ? lambda.lpNorm<Eigen::Infinity>() : 0.0;
  for (Index i = 0; i < p; ++i)
    if (lambda[i] > 1e-12 * std::max(1.0, lam_scale)) support.push_back(i);

  const double data_scale =
      1.0 + sub.value.lpNorm<Eigen::Infinity>() + (sub.jacobian * d).lpNorm<Eigen::Infinity>();
  {
    const Index ka = static_cast<Index>(support.size());
    MatrixXd K(ka + q, n);
    VectorXd rhs(ka + q);
    for (Index i = 0; i < ka; ++i) {
      K.row(i) = JI.row(support[static_cast<std::size_t>(i)]);
      rhs[i] = -FI[support[static_cast<std::size_t>(i)]];
    }
    K.bottomRows(q) = JE;
    rhs.tail(q) = -FE;

    const VectorXd dp = (ka + q) > 0 ? min_norm_solve(K, rhs, false).x : VectorXd::Zero(n);
    bool ok = ((ka + q) == 0) || ((K * dp - rhs).lpNorm<Eigen::Infinity>() <= 1e-9 * data_scale);
    if (ok && p > 0) {
      const VectorXd slack = JI * dp + FI;
      for (Index i = 0; i < p; ++i)
        if (slack[i] > feas_tol * std::max(1.0, data_scale)) ok = false;
    }
    if (ok && dp.norm() <= d.norm() + 1e-9 * std::max(1.0, d.norm())) d = dp;
  }

  // Multipliers from the final point: stationarity on the support rows.
  VectorXd mu = VectorXd::Zero(q);
  {
    const Index ka = static_cast<Index>(support.size());
    MatrixXd KT(n, ka + q);
    for (Index i = 0; i < ka; ++i) KT.col(i) = JI.row(support[static_cast<std::size_t>(i)]).transpose();
    KT.rightCols(q) = JE.transpose();
    if (ka + q > 0) {
      const VectorXd theta = min_norm_solve(KT, -d, false).x;
      bool sign_ok = true;
      for (Index i = 0; i < ka; ++i)
        if (theta[i] < -opt_tol * std::max(1.0, theta.lpNorm<Eigen::Infinity>())) sign_ok = false;
      if (sign_ok) {
        lambda.setZero();
        for (Index i = 0; i < ka; ++i) lambda[support[static_cast<std::size_t>(i)]] = std::max(theta[i], 0.0);
        mu = theta.tail(q);
      } else if (q > 0) {
        mu = min_norm_solve(JE.transpose(), -(d + JI.transpose() * lambda), false).x;
      }
    }
  }

  NewtonStep step;
  step.d = d;
  step.norm_d = d.norm();
  step.multipliers.resize(m);
  step.multipliers.head(p) = lambda;
  step.multipliers.tail(q) = mu;
  step.feasibility_residual = distance_to_cone(sub.cone, VectorXd(sub.value + sub.jacobian * d));
  if (p > 0) {
    const VectorXd slack = JI * d + FI;
    for (Index i = 0; i < p; ++i)
      if (std::abs(slack[i]) <= 1e-8 * data_scale) step.active_set.push_back(i);
  }
  return step;
}

double sublinear_image_norm(const Eigen::MatrixXd& jacobian, const ProductCone& cone,
                            const Eigen::VectorXd& w) {
  try {
    return min_norm_step({jacobian, -w, cone}).norm_d;
  } catch (const InfeasibleSubproblem&) {
    return std::numeric_limits<double>::infinity();
  }
}

}  // namespace newton_incl
