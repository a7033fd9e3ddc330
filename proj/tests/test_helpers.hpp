#ifndef PIPADMM_TEST_HELPERS_HPP_
#define PIPADMM_TEST_HELPERS_HPP_

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "pipadmm/lasso.hpp"
#include "pipadmm/solver.hpp"

namespace pipadmm_test {

using pipadmm::Iterate;
using pipadmm::Matrix;
using pipadmm::Method;
using pipadmm::SolverConfig;
using pipadmm::Vector;

struct CaptureObserver : pipadmm::IterationObserver {
  std::vector<std::pair<Iterate, Iterate>> transitions;
  void observe(const Iterate& prev, const Iterate& curr) override {
    transitions.emplace_back(prev, curr);
  }
};

/// Benchmark-protocol config: tau1 = default_tau1(theta), tau2 = 1 - 1e-8,
/// hybrid absolute tolerance 1e-8.
inline SolverConfig make_pip_config(double theta, double outer_tol = 1e-2) {
  SolverConfig c;
  c.theta = theta;
  c.tau1 = pipadmm::default_tau1(theta);
  c.tau2 = 1.0 - 1e-8;
  c.outer_tol = outer_tol;
  c.max_outer = 100000;
  c.inner_abs_tol = 1e-8;
  return c;
}

inline SolverConfig make_baseline_config(double outer_tol = 1e-2) {
  SolverConfig c;
  c.method = Method::RELERR_BASELINE;
  c.theta = 1.0;
  c.tau1 = 0.99;
  c.tau2 = 0.0;
  c.outer_tol = outer_tol;
  c.max_outer = 100000;
  c.inner_abs_tol = 1e-8;
  return c;
}

inline SolverConfig make_exact_config(double theta = 1.0, double outer_tol = 1e-8) {
  SolverConfig c;
  c.theta = theta;
  c.tau1 = 0.0;
  c.tau2 = 0.0;
  c.outer_tol = outer_tol;
  c.max_outer = 100000;
  c.inner_abs_tol = 1e-12;
  return c;
}

/// Worst violation of the soft-threshold optimality conditions for the
/// y-subproblem of an l1 split (B = I, H = 0, g = delta ||.||_1):
/// gamma~_k - beta (y_k - y_{k-1}) must be a subgradient of delta ||.||_1 at y_k.
inline double l1_y_kkt_violation(const Iterate& prev, const Iterate& curr,
                                 double beta, double delta) {
  const Vector s = curr.gamma_tilde - beta * (curr.y - prev.y);
  double worst = 0.0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (curr.y[i] == 0.0) {
      worst = std::max(worst, std::abs(s[i]) - delta);
    } else {
      worst = std::max(worst, std::abs(s[i] - delta * (curr.y[i] > 0 ? 1.0 : -1.0)));
    }
  }
  return worst;
}

/// Textbook proximal ADMM on the l1 split of least squares: exact x-update
/// with proximal term (1/(2 beta))||x - x_prev||^2, shrinkage y-update,
/// multiplier stepsize theta. Serves as the independent trajectory oracle.
struct ProxAdmmReference {
  Matrix C;
  Vector d;
  double delta, beta, theta;
  Vector x, y, gamma;
  Eigen::LDLT<Matrix> ldlt;

  ProxAdmmReference(Matrix c, Vector dd, double del, double b, double th)
      : C(std::move(c)), d(std::move(dd)), delta(del), beta(b), theta(th) {
    const Eigen::Index n = C.cols();
    Matrix s = C.transpose() * C;
    s.diagonal().array() += beta + 1.0 / beta;
    ldlt.compute(s);
    x = Vector::Zero(n);
    y = Vector::Zero(n);
    gamma = Vector::Zero(n);
  }

  void step() {
    const Vector rhs = C.transpose() * d - gamma + beta * y + x / beta;
    x = ldlt.solve(rhs);
    y = pipadmm::shrinkage(x + gamma / beta, delta / beta);
    gamma -= theta * beta * (y - x);
  }
};

}  // namespace pipadmm_test

#endif  // PIPADMM_TEST_HELPERS_HPP_
