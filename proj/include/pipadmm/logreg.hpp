#ifndef PIPADMM_LOGREG_HPP_
#define PIPADMM_LOGREG_HPP_

#include "pipadmm/problem.hpp"

namespace pipadmm {

/// min sum_i log(1 + exp(-d_i <(c_i, 1), x>)) + delta m ||u||_1 over x = (u, t),
/// with the intercept t stored last and never penalized.
struct LogRegInstance {
  Matrix C;      ///< m x n feature rows c_i (no intercept column)
  Vector d;      ///< labels in {-1, +1}
  double delta = 0.0;

  Eigen::Index n_samples() const { return C.rows(); }
  Eigen::Index n_features() const { return C.cols(); }

  /// Loss + penalty at x = (u, t).
  double objective(const Vector& x) const;
  /// sum_i log(1 + exp(-d_i(<c_i, u> + t))), overflow-safe.
  double loss(const Vector& x) const;
  Vector loss_grad(const Vector& x) const;
  Matrix loss_hess(const Vector& x) const;
};

/// Largest penalty with a nonzero solution: (1/m) ||C^T tbar||_inf with
/// tbar_i = m_neg/m on positive samples and -m_pos/m on negative ones.
/// Throws when the labels are single-class.
double logreg_lambda_max(const Matrix& C, const Vector& d);

/// Validates labels, scales C (columns when n >= m, rows otherwise) and sets
/// delta = 0.5 * logreg_lambda_max on the scaled matrix.
LogRegInstance make_logreg_instance(Matrix C, Vector d);

/// Split form with f the logistic loss over x in R^{n+1}, g(u,t) = delta m ||u||_1,
/// A = -I, B = I, b = 0, H = 0. The x-oracle runs damped Newton from the zero
/// start on f(x) + <x, gamma_prev> + (beta/2)||y_prev - x||^2 and returns its
/// gradient as v; the y-subproblem is closed form (shrinkage on the u-block,
/// pass-through on the intercept).
SplitProblem logreg_problem(const LogRegInstance& inst, const SolverConfig& config);

}  // namespace pipadmm

#endif  // PIPADMM_LOGREG_HPP_
