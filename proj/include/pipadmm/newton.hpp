#ifndef PIPADMM_NEWTON_HPP_
#define PIPADMM_NEWTON_HPP_

#include "pipadmm/problem.hpp"

namespace pipadmm {

using ValueFn = std::function<double(const Vector&)>;
using GradFn = std::function<Vector(const Vector&)>;
using HessFn = std::function<Matrix(const Vector&)>;

struct NewtonResult {
  Vector x;
  Vector v;            ///< gradient at x
  int iters = 0;
  bool accepted = false;
};

/// Damped Newton on a smooth strongly convex h, stopping at the first iterate
/// (including the start) whose gradient satisfies `accept(x, g)`. Steps use
/// backtracking (Armijo constant 1e-4, halving factor 0.5, at most 50
/// halvings) so h decreases strictly until acceptance. The Newton system is
/// solved by a dense symmetric factorization up to `dense_limit` unknowns and
/// by conjugate gradients above it.
NewtonResult newton_solve(const ValueFn& value, const GradFn& grad, const HessFn& hess,
                          const Vector& x_start, const AcceptFn& accept, int max_inner,
                          int dense_limit = 2000);

}  // namespace pipadmm

#endif  // PIPADMM_NEWTON_HPP_
