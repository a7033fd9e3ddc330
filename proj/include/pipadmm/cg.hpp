#ifndef PIPADMM_CG_HPP_
#define PIPADMM_CG_HPP_

#include "pipadmm/problem.hpp"

namespace pipadmm {

struct CgResult {
  Vector x;
  Vector v;            ///< S x - rhs, the certificate-sign residual
  int iters = 0;
  bool accepted = false;
};

/// Conjugate gradients on the SPD system S x = rhs, stopping at the first
/// iterate (including the start) whose residual v = S x - rhs satisfies
/// `accept(x, v)`. The callback fires exactly once per iterate. The recurrence
/// residual is refreshed from scratch every 50 iterations and checked against
/// the recurrence to 1e-10 of the system scale.
///
/// Note the sign: v is S x - rhs, the negative of the textbook CG residual,
/// so that v is directly the subgradient certificate of the outer loop.
CgResult cg_solve(const LinearMap& apply_S, const Vector& rhs, const Vector& x_start,
                  const AcceptFn& accept, int max_inner,
                  const std::function<void(const Vector&, int)>& debug_hook = nullptr);

}  // namespace pipadmm

#endif  // PIPADMM_CG_HPP_
