#ifndef PIPADMM_MSEMINORM_HPP_
#define PIPADMM_MSEMINORM_HPP_

#include "pipadmm/problem.hpp"

namespace pipadmm {

/// Seminorm induced by the block operator
///   M = diag( I/beta,  H + beta B*B,  I/(theta beta) )
/// on (x, y, gamma) triples. Measures step lengths and residuals of the
/// outer loop.
struct MSeminorm {
  double beta = 1.0;
  double theta = 1.0;
  LinearMap apply_B;
  LinearMap apply_Bt;
  LinearMap apply_H;  ///< empty means H = 0

  static MSeminorm from(const SplitProblem& p, const SolverConfig& c) {
    return MSeminorm{c.beta, c.theta, p.apply_B, p.apply_Bt, p.apply_H};
  }

  /// <M z, z> = ||zx||^2/beta + <H zy, zy> + beta ||B zy||^2 + ||zg||^2/(theta beta).
  /// Throws std::runtime_error when the middle block evaluates negative
  /// beyond -1e-12 of the natural scale (an inconsistent H or B).
  double squared(const Vector& zx, const Vector& zy, const Vector& zg) const;

  double norm(const Vector& zx, const Vector& zy, const Vector& zg) const;

  /// Applies the middle block H + beta B*B.
  Vector y_block(const Vector& zy) const;
};

}  // namespace pipadmm

#endif  // PIPADMM_MSEMINORM_HPP_
