#include "pipadmm/newton.hpp"

#include <Eigen/Cholesky>
#include <stdexcept>

#include "pipadmm/cg.hpp"

namespace pipadmm {

namespace {

Vector solve_newton_system(const Matrix& h, const Vector& g, int dense_limit) {
  if (h.rows() <= dense_limit) {
    return h.ldlt().solve(-g);
  }
  // Solve H d = -g iteratively; the Hessian carries a beta*I term, so a
  // fixed relative drop is enough for a usable direction.
  const double tol = 1e-10 * (1.0 + g.norm());
  const AcceptFn accept = [tol](const Vector&, const Vector& res) {
    return res.norm() <= tol;
  };
  const LinearMap apply = [&h](const Vector& p) { return h * p; };
  const CgResult cg = cg_solve(apply, -g, Vector::Zero(g.size()), accept,
                               static_cast<int>(4 * g.size()));
  return cg.x;
}

}  // namespace

NewtonResult newton_solve(const ValueFn& value, const GradFn& grad, const HessFn& hess,
                          const Vector& x_start, const AcceptFn& accept, int max_inner,
                          int dense_limit) {
  NewtonResult res;
  res.x = x_start;
  res.v = grad(res.x);
  res.iters = 0;
  if (accept(res.x, res.v)) {
    res.accepted = true;
    return res;
  }

  double fx = value(res.x);
  for (int j = 1; j <= max_inner; ++j) {
    const Vector d = solve_newton_system(hess(res.x), res.v, dense_limit);
    const double slope = res.v.dot(d);
    if (!(slope < 0.0)) {
      throw std::runtime_error("newton_solve: Newton direction is not a descent direction");
    }
    double t = 1.0;
    double f_trial = value(res.x + d);
    int halvings = 0;
    while (f_trial > fx + 1e-4 * t * slope) {
      if (++halvings > 50) {
        res.accepted = false;
        return res;  // line search failure
      }
      t *= 0.5;
      f_trial = value(res.x + t * d);
    }
    res.x += t * d;
    fx = f_trial;
    res.v = grad(res.x);
    res.iters = j;
    if (accept(res.x, res.v)) {
      res.accepted = true;
      return res;
    }
  }
  res.accepted = false;
  return res;
}

}  // namespace pipadmm
