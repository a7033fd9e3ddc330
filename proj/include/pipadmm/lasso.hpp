#ifndef PIPADMM_LASSO_HPP_
#define PIPADMM_LASSO_HPP_

#include "pipadmm/problem.hpp"

namespace pipadmm {

/// Componentwise soft threshold sign(a_i) max(0, |a_i| - kappa).
Vector shrinkage(const Vector& a, double kappa);

/// 0.1 * ||C^T d||_inf. Throws when C^T d = 0 (the zero vector already
/// minimizes the regularized objective).
double lasso_delta(const Matrix& C, const Vector& d);

/// min (1/2)||C x - d||^2 + delta ||y||_1  subject to  y - x = 0.
struct LassoInstance {
  Matrix C;
  Vector d;
  double delta = 0.0;

  double objective(const Vector& x) const {
    return 0.5 * (C * x - d).squaredNorm() + delta * x.lpNorm<1>();
  }
};

/// Scales the columns of C to unit 2-norm and sets delta = lasso_delta.
LassoInstance make_lasso_instance(Matrix C, Vector d);

/// How the x-subproblem is attacked.
///  CG:     conjugate gradients on (C^T C + beta I) x = C^T d + beta y_prev - gamma_prev,
///          started at the right-hand side, accepted by the hybrid rule.
///  DIRECT: exact solve of the proximal x-subproblem by a cached dense
///          factorization; the certificate inclusion then holds by
///          construction (the acceptance inequality is the mathematical
///          statement LHS = 0, which float roundoff can miss by ulps).
enum class LassoInnerMode { CG, DIRECT };

/// Builds the split problem with f(x) = (1/2)||C x - d||^2, g(y) = delta||y||_1,
/// A = -I, B = I, b = 0, H = 0. The Gram matrix C^T C is never formed in CG
/// mode; the operator applies two matrix-vector products. The y-subproblem is
/// the closed form shrinkage_{delta/beta}(x~ + gamma_prev/beta).
SplitProblem lasso_problem(const LassoInstance& inst, const SolverConfig& config,
                           LassoInnerMode mode = LassoInnerMode::CG);

}  // namespace pipadmm

#endif  // PIPADMM_LASSO_HPP_
