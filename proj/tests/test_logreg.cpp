#include <cmath>
#include <random>

#include "doctest.h"
#include "pipadmm/logreg.hpp"
#include "test_helpers.hpp"

using namespace pipadmm;
using namespace pipadmm_test;

namespace {

Matrix rand_mat(std::mt19937_64& rng, int m, int n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix c(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) c(i, j) = u(rng);
  return c;
}

Vector rand_labels(std::mt19937_64& rng, int m) {
  Vector d(m);
  for (int i = 0; i < m; ++i) d[i] = (rng() & 1) ? 1.0 : -1.0;
  if (d.maxCoeff() < 0) d[0] = 1.0;
  if (d.minCoeff() > 0) d[0] = -1.0;
  return d;
}

}  // namespace

TEST_CASE("lambda_max hand example") {
  const Matrix c = (Matrix(2, 1) << 1.0, -1.0).finished();
  const Vector d = (Vector(2) << 1.0, -1.0).finished();
  CHECK(logreg_lambda_max(c, d) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("lambda_max is invariant under sample permutation") {
  std::mt19937_64 rng(3);
  const Matrix c = rand_mat(rng, 8, 5);
  const Vector d = rand_labels(rng, 8);
  const double base = logreg_lambda_max(c, d);

  std::vector<int> perm = {3, 1, 7, 0, 5, 2, 6, 4};
  Matrix cp(8, 5);
  Vector dp(8);
  for (int i = 0; i < 8; ++i) {
    cp.row(i) = c.row(perm[i]);
    dp[i] = d[perm[i]];
  }
  CHECK(logreg_lambda_max(cp, dp) == doctest::Approx(base).epsilon(1e-13));
}

TEST_CASE("lambda_max rejects bad labels") {
  const Matrix c = Matrix::Ones(3, 2);
  CHECK_THROWS_AS(logreg_lambda_max(c, Vector::Ones(3)), std::domain_error);
  Vector d = (Vector(3) << 1.0, -1.0, 0.5).finished();
  CHECK_THROWS_AS(logreg_lambda_max(c, d), std::domain_error);
}

TEST_CASE("instance preparation scales columns or rows by shape") {
  std::mt19937_64 rng(5);
  // n >= m: columns become unit
  {
    const LogRegInstance inst = make_logreg_instance(rand_mat(rng, 4, 6), rand_labels(rng, 4));
    for (int j = 0; j < 6; ++j) {
      CHECK(inst.C.col(j).norm() == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
  // m > n: rows become unit
  {
    const LogRegInstance inst = make_logreg_instance(rand_mat(rng, 6, 4), rand_labels(rng, 6));
    for (int i = 0; i < 6; ++i) {
      CHECK(inst.C.row(i).norm() == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("loss gradient matches central finite differences") {
  std::mt19937_64 rng(7);
  const LogRegInstance inst = make_logreg_instance(rand_mat(rng, 30, 10), rand_labels(rng, 30));
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int t = 0; t < 20; ++t) {
    Vector x(11);
    for (int i = 0; i < 11; ++i) x[i] = u(rng);
    const Vector g = inst.loss_grad(x);
    for (int i = 0; i < 11; ++i) {
      const double h = 1e-5 * (1.0 + std::abs(x[i]));
      Vector xp = x, xm = x;
      xp[i] += h;
      xm[i] -= h;
      const double fd = (inst.loss(xp) - inst.loss(xm)) / (2.0 * h);
      CHECK(std::abs(g[i] - fd) <= 1e-6 * (1.0 + std::abs(fd)));
    }
  }
}

TEST_CASE("loss hessian matches finite-differenced gradients") {
  std::mt19937_64 rng(9);
  const LogRegInstance inst = make_logreg_instance(rand_mat(rng, 30, 10), rand_labels(rng, 30));
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int t = 0; t < 5; ++t) {
    Vector x(11);
    for (int i = 0; i < 11; ++i) x[i] = u(rng);
    const Matrix hess = inst.loss_hess(x);
    CHECK((hess - hess.transpose()).norm() <= 1e-12 * (1.0 + hess.norm()));
    for (int i = 0; i < 11; ++i) {
      const double h = 1e-6 * (1.0 + std::abs(x[i]));
      Vector xp = x, xm = x;
      xp[i] += h;
      xm[i] -= h;
      const Vector fd = (inst.loss_grad(xp) - inst.loss_grad(xm)) / (2.0 * h);
      for (int j = 0; j < 11; ++j) {
        CHECK(std::abs(hess(j, i) - fd[j]) <= 1e-5 * (1.0 + std::abs(fd[j])));
      }
    }
  }
}

TEST_CASE("zero gradient at a balanced start accepts immediately") {
  // paired samples with opposite labels make the loss gradient vanish at 0
  const Matrix c = (Matrix(2, 1) << 0.4, 0.4).finished();
  const Vector d = (Vector(2) << 1.0, -1.0).finished();
  const LogRegInstance inst{c, d, 0.05};
  const SolverConfig cfg = make_pip_config(1.0);
  const SplitProblem p = logreg_problem(inst, cfg);

  Iterate start;
  start.k = 0;
  start.x = Vector::Zero(2);
  start.y = Vector::Zero(2);
  start.gamma = Vector::Zero(2);
  const Iterate next = step(start, p, cfg);
  CHECK(next.inner_iters == 0);
  CHECK(next.v.norm() <= 1e-12);
}

TEST_CASE("solved instance satisfies the split optimality structure") {
  std::mt19937_64 rng(11);
  const LogRegInstance inst = make_logreg_instance(rand_mat(rng, 25, 8), rand_labels(rng, 25));
  const SolverConfig cfg = make_pip_config(1.3);
  const SplitProblem p = logreg_problem(inst, cfg);
  check_problem_structure(p);

  CaptureObserver cap;
  const SolveResult res = run(p, cfg, Vector::Zero(9), Vector::Zero(9),
                              Vector::Zero(9), &cap);
  REQUIRE(res.status == Status::CONVERGED);

  const double kappa = static_cast<double>(inst.n_samples()) * inst.delta;
  for (const auto& [prev, curr] : cap.transitions) {
    // v equals grad f(x~) - A* g~ recomputed along an independent path
    const Vector v_true = inst.loss_grad(curr.x_tilde) + curr.gamma_tilde;
    CHECK((curr.v - v_true).norm() <= 1e-10 * (1.0 + v_true.norm()));

    // y-subproblem optimality: u-block soft-threshold conditions, free intercept
    const Vector s = curr.gamma_tilde - cfg.beta * (curr.y - prev.y);
    for (int i = 0; i < 8; ++i) {
      if (curr.y[i] == 0.0) {
        CHECK(std::abs(s[i]) <= kappa + 1e-10);
      } else {
        CHECK(std::abs(s[i] - kappa * (curr.y[i] > 0 ? 1.0 : -1.0)) <= 1e-10);
      }
    }
    CHECK(std::abs(s[8]) <= 1e-10);  // intercept is unpenalized
  }
}
