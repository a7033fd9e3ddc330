#include <cmath>
#include <random>

#include "doctest.h"
#include "pipadmm/random_lasso.hpp"
#include "test_helpers.hpp"

using namespace pipadmm;
using namespace pipadmm_test;

namespace {

Vector rand_vec(std::mt19937_64& rng, int n, double lo = -2.0, double hi = 2.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  Vector v(n);
  for (int i = 0; i < n; ++i) v[i] = u(rng);
  return v;
}

/// Proximal-gradient reference for (1/2)||Cx - d||^2 + delta||x||_1, run to a
/// tight fixed point; the independent objective oracle.
Vector ista_reference(const Matrix& C, const Vector& d, double delta) {
  // power iteration for the Lipschitz constant of the smooth part
  Vector p = Vector::Ones(C.cols()).normalized();
  double lip = 1.0;
  for (int t = 0; t < 200; ++t) {
    p = C.transpose() * (C * p);
    lip = p.norm();
    p /= lip;
  }
  lip *= 1.01;
  Vector x = Vector::Zero(C.cols());
  for (long t = 0; t < 200000; ++t) {
    const Vector next = shrinkage(x - (C.transpose() * (C * x - d)) / lip, delta / lip);
    const double move = (next - x).norm();
    x = next;
    if (move <= 1e-12 * (1.0 + x.norm())) break;
  }
  return x;
}

}  // namespace

TEST_CASE("shrinkage componentwise examples") {
  const Vector a = (Vector(2) << 1.2, -0.3).finished();
  const Vector out = shrinkage(a, 0.5);
  CHECK(out[0] == doctest::Approx(0.7).epsilon(1e-15));
  CHECK(out[1] == 0.0);

  CHECK((shrinkage(a, 0.0) - a).norm() == 0.0);
  CHECK(shrinkage(a, 2.0).norm() == 0.0);
  CHECK_THROWS_AS(shrinkage(a, -0.1), std::domain_error);
}

TEST_CASE("shrinkage sign preservation and sup-norm contraction") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const Vector a = rand_vec(rng, 12);
    const double kappa = std::abs(rand_vec(rng, 1)[0]);
    const Vector out = shrinkage(a, kappa);
    for (int i = 0; i < 12; ++i) {
      CHECK(out[i] * a[i] >= 0.0);  // same sign or zero
    }
    CHECK(out.lpNorm<Eigen::Infinity>() <=
          std::max(0.0, a.lpNorm<Eigen::Infinity>() - kappa) + 1e-15);
  }
}

TEST_CASE("shrinkage is nonexpansive") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    const Vector a = rand_vec(rng, 9);
    const Vector b = rand_vec(rng, 9);
    const double kappa = 0.5 * std::abs(rand_vec(rng, 1)[0]);
    CHECK((shrinkage(a, kappa) - shrinkage(b, kappa)).norm() <=
          (a - b).norm() * (1.0 + 1e-14));
  }
}

TEST_CASE("lasso_delta worked example and guards") {
  const Matrix c = Matrix::Identity(2, 2);
  const Vector d = (Vector(2) << 2.0, -4.0).finished();
  CHECK(lasso_delta(c, d) == doctest::Approx(0.4).epsilon(1e-14));
  CHECK_THROWS_AS(lasso_delta(c, Vector::Zero(2)), std::domain_error);
  // homogeneity in d
  CHECK(lasso_delta(c, 3.0 * d) == doctest::Approx(1.2).epsilon(1e-14));
}

TEST_CASE("prepared instances have unit columns") {
  std::mt19937_64 rng(7);
  Matrix c(6, 4);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 4; ++j) c(i, j) = rand_vec(rng, 1)[0];
  const LassoInstance inst = make_lasso_instance(c, rand_vec(rng, 6));
  for (int j = 0; j < 4; ++j) {
    CHECK(inst.C.col(j).norm() == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK(inst.delta == doctest::Approx(lasso_delta(inst.C, inst.d)).epsilon(1e-14));
}

TEST_CASE("one-dimensional instance converges to the soft-threshold solution") {
  const LassoInstance inst{Matrix::Ones(1, 1), Vector::Ones(1), 0.3};
  const SolverConfig c = make_exact_config(1.0, 1e-8);
  const SplitProblem p = lasso_problem(inst, c, LassoInnerMode::DIRECT);
  const SolveResult res = run(p, c, Vector::Zero(1), Vector::Zero(1), Vector::Zero(1));
  REQUIRE(res.status == Status::CONVERGED);
  CHECK(res.final_iterate.x[0] == doctest::Approx(0.7).epsilon(1e-6));
  CHECK(res.final_iterate.y[0] == doctest::Approx(0.7).epsilon(1e-6));
}

TEST_CASE("oracle residual satisfies the subgradient identity") {
  const LassoInstance inst = gen_random_lasso({15, 40, 13, 8});
  const SolverConfig c = make_pip_config(1.0);
  const SplitProblem p = lasso_problem(inst, c);

  CaptureObserver cap;
  const SolveResult res = run(p, c, Vector::Zero(40), Vector::Zero(40),
                              Vector::Zero(40), &cap);
  REQUIRE(res.status == Status::CONVERGED);
  for (const auto& [prev, curr] : cap.transitions) {
    // v must equal grad f(x~) - A* g~ = C^T(C x~ - d) + g~, recomputed directly
    const Vector v_true =
        inst.C.transpose() * (inst.C * curr.x_tilde - inst.d) + curr.gamma_tilde;
    CHECK((curr.v - v_true).norm() <= 1e-10 * (1.0 + v_true.norm()));
    // and equal the normal-equations residual (C^T C + beta I) x~ - rhs
    const Vector rhs = inst.C.transpose() * inst.d + c.beta * prev.y - prev.gamma;
    const Vector v_sys =
        inst.C.transpose() * (inst.C * curr.x_tilde) + c.beta * curr.x_tilde - rhs;
    CHECK((curr.v - v_sys).norm() <= 1e-10 * (1.0 + v_sys.norm()));
  }
}

TEST_CASE("direct oracle also satisfies the subgradient identity") {
  const LassoInstance inst = gen_random_lasso({12, 30, 17, 6});
  const SolverConfig c = make_exact_config(1.0, 1e-6);
  const SplitProblem p = lasso_problem(inst, c, LassoInnerMode::DIRECT);
  CaptureObserver cap;
  const SolveResult res = run(p, c, Vector::Zero(30), Vector::Zero(30),
                              Vector::Zero(30), &cap);
  REQUIRE(res.status == Status::CONVERGED);
  for (const auto& [prev, curr] : cap.transitions) {
    const Vector v_true =
        inst.C.transpose() * (inst.C * curr.x_tilde - inst.d) + curr.gamma_tilde;
    CHECK((curr.v - v_true).norm() <= 1e-10 * (1.0 + v_true.norm()));
  }
}

TEST_CASE("final objective agrees with a proximal-gradient reference") {
  const LassoInstance inst = gen_random_lasso({30, 80, 29, 12});
  const Vector x_ref = ista_reference(inst.C, inst.d, inst.delta);
  const double obj_ref = inst.objective(x_ref);

  const SolverConfig c = make_pip_config(1.0);
  const SplitProblem p = lasso_problem(inst, c);
  const SolveResult res = run(p, c, Vector::Zero(80), Vector::Zero(80), Vector::Zero(80));
  REQUIRE(res.status == Status::CONVERGED);
  const double obj = inst.objective(res.final_iterate.y);
  CHECK(std::abs(obj - obj_ref) <= 1e-4 * (1.0 + std::abs(obj_ref)));
}
