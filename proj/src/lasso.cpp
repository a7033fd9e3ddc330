#include "pipadmm/lasso.hpp"

#include <Eigen/Cholesky>
#include <cmath>
#include <memory>
#include <stdexcept>

#include "pipadmm/cg.hpp"

namespace pipadmm {

Vector shrinkage(const Vector& a, double kappa) {
  if (kappa < 0.0) throw std::domain_error("shrinkage: kappa must be >= 0");
  Vector out(a.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    const double m = std::abs(a[i]) - kappa;
    out[i] = m > 0.0 ? (a[i] > 0.0 ? m : -m) : 0.0;
  }
  return out;
}

double lasso_delta(const Matrix& C, const Vector& d) {
  if (C.rows() != d.size()) throw std::invalid_argument("lasso_delta: dimension mismatch");
  const double v = (C.transpose() * d).lpNorm<Eigen::Infinity>();
  if (v == 0.0) {
    throw std::domain_error("lasso_delta: C^T d = 0; instance is degenerate (x = 0 is optimal)");
  }
  return 0.1 * v;
}

LassoInstance make_lasso_instance(Matrix C, Vector d) {
  for (Eigen::Index j = 0; j < C.cols(); ++j) {
    const double nrm = C.col(j).norm();
    if (nrm > 0.0) C.col(j) /= nrm;
  }
  const double delta = lasso_delta(C, d);
  return LassoInstance{std::move(C), std::move(d), delta};
}

namespace {

struct LassoData {
  Matrix C;
  Vector d;
  Vector Ctd;
  double delta;
  // Factorization of C^T C + (beta + 1/beta) I for the exact proximal solve;
  // built once at problem construction so solves stay reentrant.
  Eigen::LDLT<Matrix> prox_ldlt;
  double prox_beta = 0.0;
};

OracleResult lasso_cg_oracle(const LassoData& data, const Vector& x_prev,
                             const Vector& y_prev, const Vector& gamma_prev,
                             const SolverConfig& config, const AcceptFn& accept) {
  const double beta = config.beta;
  const Vector rhs = data.Ctd + beta * y_prev - gamma_prev;
  const LinearMap apply_S = [&data, beta](const Vector& p) -> Vector {
    return data.C.transpose() * (data.C * p) + beta * p;
  };
  const CgResult cg = cg_solve(apply_S, rhs, rhs, accept,
                               config.effective_max_inner(x_prev.size()));
  (void)x_prev;
  return OracleResult{cg.x, cg.v, cg.iters, cg.accepted};
}

OracleResult lasso_direct_oracle(const LassoData& data, const Vector& x_prev,
                                 const Vector& y_prev, const Vector& gamma_prev,
                                 const SolverConfig& config, const AcceptFn& accept) {
  const double beta = config.beta;
  if (beta != data.prox_beta) {
    throw std::invalid_argument("lasso direct oracle: built for a different beta");
  }
  const Vector rhs = data.Ctd - gamma_prev + beta * y_prev + x_prev / beta;
  const Vector x_tilde = data.prox_ldlt.solve(rhs);
  // v from the subgradient identity at the exact minimizer; the relative-error
  // inequality then holds with LHS = 0 in exact arithmetic.
  const Vector g_tilde = gamma_prev - beta * (y_prev - x_tilde);
  const Vector v = data.C.transpose() * (data.C * x_tilde - data.d) + g_tilde;
  accept(x_tilde, v);
  return OracleResult{x_tilde, v, 1, true};
}

}  // namespace

SplitProblem lasso_problem(const LassoInstance& inst, const SolverConfig& config,
                           LassoInnerMode mode) {
  config.validate();
  auto data = std::make_shared<LassoData>();
  data->C = inst.C;
  data->d = inst.d;
  data->Ctd = inst.C.transpose() * inst.d;
  data->delta = inst.delta;
  if (mode == LassoInnerMode::DIRECT) {
    Matrix s = inst.C.transpose() * inst.C;
    s.diagonal().array() += config.beta + 1.0 / config.beta;
    data->prox_ldlt.compute(s);
    data->prox_beta = config.beta;
  }

  const Eigen::Index n = inst.C.cols();
  SplitProblem p;
  p.x_dim = n;
  p.y_dim = n;
  p.c_dim = n;
  p.apply_A = [](const Vector& u) -> Vector { return -u; };
  p.apply_At = [](const Vector& u) -> Vector { return -u; };
  p.apply_B = [](const Vector& u) -> Vector { return u; };
  p.apply_Bt = [](const Vector& u) -> Vector { return u; };
  p.b = Vector::Zero(n);

  if (mode == LassoInnerMode::CG) {
    p.x_oracle = [data](const Vector& x_prev, const Vector& y_prev, const Vector& g_prev,
                        const SolverConfig& c, const AcceptFn& accept) {
      return lasso_cg_oracle(*data, x_prev, y_prev, g_prev, c, accept);
    };
  } else {
    p.x_oracle = [data](const Vector& x_prev, const Vector& y_prev, const Vector& g_prev,
                        const SolverConfig& c, const AcceptFn& accept) {
      return lasso_direct_oracle(*data, x_prev, y_prev, g_prev, c, accept);
    };
  }

  p.y_prox = [data](const Vector& x_tilde, const Vector& gamma_prev, const Vector&,
                    const SolverConfig& c) {
    return shrinkage(x_tilde + gamma_prev / c.beta, data->delta / c.beta);
  };
  return p;
}

}  // namespace pipadmm
