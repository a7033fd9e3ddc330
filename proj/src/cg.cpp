#include "pipadmm/cg.hpp"

#include <stdexcept>

namespace pipadmm {

CgResult cg_solve(const LinearMap& apply_S, const Vector& rhs, const Vector& x_start,
                  const AcceptFn& accept, int max_inner,
                  const std::function<void(const Vector&, int)>& debug_hook) {
  CgResult res;
  res.x = x_start;
  Vector r = rhs - apply_S(res.x);  // textbook residual, r = -v
  res.v = -r;
  res.iters = 0;
  if (debug_hook) debug_hook(res.x, 0);
  if (accept(res.x, res.v)) {
    res.accepted = true;
    return res;
  }

  Vector p = r;
  double rr = r.squaredNorm();
  for (int j = 1; j <= max_inner; ++j) {
    if (rr == 0.0) break;  // stagnated exactly; nothing further to try
    const Vector sp = apply_S(p);
    const double psp = p.dot(sp);
    if (!(psp > 0.0)) {
      throw std::runtime_error("cg_solve: operator is not positive definite on the search direction");
    }
    const double alpha = rr / psp;
    res.x += alpha * p;
    r -= alpha * sp;
    if (j % 50 == 0) {
      const Vector r_true = rhs - apply_S(res.x);
      if ((r_true - r).norm() > 1e-10 * (1.0 + rhs.norm() + r_true.norm())) {
        throw std::runtime_error("cg_solve: recurrence residual drifted from S x - rhs");
      }
      r = r_true;
    }
    const double rr_next = r.squaredNorm();
    res.v = -r;
    res.iters = j;
    if (debug_hook) debug_hook(res.x, j);
    if (accept(res.x, res.v)) {
      res.accepted = true;
      return res;
    }
    p = r + (rr_next / rr) * p;
    rr = rr_next;
  }
  res.accepted = false;
  return res;
}

}  // namespace pipadmm
