#include "pipadmm/logreg.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

#include "pipadmm/lasso.hpp"
#include "pipadmm/newton.hpp"

namespace pipadmm {

namespace {

// log(1 + exp(w)) without overflow.
double log1pexp(double w) {
  return w > 0.0 ? w + std::log1p(std::exp(-w)) : std::log1p(std::exp(w));
}

double sigmoid(double w) {
  return w > 0.0 ? 1.0 / (1.0 + std::exp(-w)) : std::exp(w) / (1.0 + std::exp(w));
}

// Margins z_i = d_i (<c_i, u> + t) for x = (u, t).
Vector margins(const Matrix& C, const Vector& d, const Vector& x) {
  Vector lin = C * x.head(C.cols());
  lin.array() += x[x.size() - 1];
  return d.cwiseProduct(lin);
}

}  // namespace

double LogRegInstance::loss(const Vector& x) const {
  const Vector z = margins(C, d, x);
  double s = 0.0;
  for (Eigen::Index i = 0; i < z.size(); ++i) s += log1pexp(-z[i]);
  return s;
}

double LogRegInstance::objective(const Vector& x) const {
  return loss(x) + delta * static_cast<double>(C.rows()) * x.head(C.cols()).lpNorm<1>();
}

Vector LogRegInstance::loss_grad(const Vector& x) const {
  const Eigen::Index m = C.rows(), n = C.cols();
  const Vector z = margins(C, d, x);
  Vector w(m);
  for (Eigen::Index i = 0; i < m; ++i) w[i] = -d[i] * sigmoid(-z[i]);
  Vector g(n + 1);
  g.head(n) = C.transpose() * w;
  g[n] = w.sum();
  return g;
}

Matrix LogRegInstance::loss_hess(const Vector& x) const {
  const Eigen::Index m = C.rows(), n = C.cols();
  const Vector z = margins(C, d, x);
  Vector w(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const double s = sigmoid(z[i]);
    w[i] = s * (1.0 - s);
  }
  Matrix h(n + 1, n + 1);
  const Matrix cw = C.transpose() * w.asDiagonal();  // n x m
  h.topLeftCorner(n, n) = cw * C;
  h.block(0, n, n, 1) = cw.rowwise().sum();
  h.block(n, 0, 1, n) = h.block(0, n, n, 1).transpose();
  h(n, n) = w.sum();
  return h;
}

double logreg_lambda_max(const Matrix& C, const Vector& d) {
  const Eigen::Index m = C.rows();
  if (d.size() != m) throw std::invalid_argument("logreg_lambda_max: dimension mismatch");
  long pos = 0, neg = 0;
  for (Eigen::Index i = 0; i < m; ++i) {
    if (d[i] == 1.0) ++pos;
    else if (d[i] == -1.0) ++neg;
    else throw std::domain_error("logreg_lambda_max: labels must be -1 or +1");
  }
  if (pos == 0 || neg == 0) {
    throw std::domain_error("logreg_lambda_max: single-class labels");
  }
  Vector tbar(m);
  const double md = static_cast<double>(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    tbar[i] = d[i] > 0.0 ? static_cast<double>(neg) / md : -static_cast<double>(pos) / md;
  }
  return (C.transpose() * tbar).lpNorm<Eigen::Infinity>() / md;
}

LogRegInstance make_logreg_instance(Matrix C, Vector d) {
  const Eigen::Index m = C.rows(), n = C.cols();
  if (d.size() != m) throw std::invalid_argument("make_logreg_instance: dimension mismatch");
  for (Eigen::Index i = 0; i < m; ++i) {
    if (d[i] != 1.0 && d[i] != -1.0) {
      throw std::domain_error("make_logreg_instance: labels must be -1 or +1");
    }
  }
  if (n >= m) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double nrm = C.col(j).norm();
      if (nrm > 0.0) C.col(j) /= nrm;
    }
  } else {
    for (Eigen::Index i = 0; i < m; ++i) {
      const double nrm = C.row(i).norm();
      if (nrm > 0.0) C.row(i) /= nrm;
    }
  }
  const double delta = 0.5 * logreg_lambda_max(C, d);
  return LogRegInstance{std::move(C), std::move(d), delta};
}

SplitProblem logreg_problem(const LogRegInstance& inst, const SolverConfig& config) {
  config.validate();
  auto data = std::make_shared<LogRegInstance>(inst);
  const Eigen::Index n = inst.n_features();
  const Eigen::Index dim = n + 1;

  SplitProblem p;
  p.x_dim = dim;
  p.y_dim = dim;
  p.c_dim = dim;
  p.apply_A = [](const Vector& u) -> Vector { return -u; };
  p.apply_At = [](const Vector& u) -> Vector { return -u; };
  p.apply_B = [](const Vector& u) -> Vector { return u; };
  p.apply_Bt = [](const Vector& u) -> Vector { return u; };
  p.b = Vector::Zero(dim);

  p.x_oracle = [data, dim](const Vector&, const Vector& y_prev, const Vector& g_prev,
                           const SolverConfig& c, const AcceptFn& accept) {
    const double beta = c.beta;
    const ValueFn value = [&](const Vector& x) {
      return data->loss(x) + x.dot(g_prev) + 0.5 * beta * (y_prev - x).squaredNorm();
    };
    const GradFn grad = [&](const Vector& x) -> Vector {
      return data->loss_grad(x) + g_prev + beta * (x - y_prev);
    };
    const HessFn hess = [&](const Vector& x) -> Matrix {
      Matrix h = data->loss_hess(x);
      h.diagonal().array() += beta;
      return h;
    };
    const NewtonResult r = newton_solve(value, grad, hess, Vector::Zero(dim), accept,
                                        c.effective_max_inner(dim));
    return OracleResult{r.x, r.v, r.iters, r.accepted};
  };

  p.y_prox = [data, n](const Vector& x_tilde, const Vector& gamma_prev, const Vector&,
                       const SolverConfig& c) {
    const double beta = c.beta;
    const double m = static_cast<double>(data->n_samples());
    Vector y(x_tilde.size());
    y.head(n) = shrinkage(x_tilde.head(n) + gamma_prev.head(n) / beta,
                          m * data->delta / beta);
    y[n] = x_tilde[n] + gamma_prev[n] / beta;
    return y;
  };
  return p;
}

}  // namespace pipadmm
