#ifndef PIPADMM_ERGODIC_HPP_
#define PIPADMM_ERGODIC_HPP_

#include "pipadmm/mseminorm.hpp"
#include "pipadmm/solver.hpp"

namespace pipadmm {

/// Running sufficient statistics for the ergodic (averaged) certificates.
///
/// The epsilon terms reference the final averages inside each summand, e.g.
///   eps_x(k) = (1/k) sum_i <s_i, x~_i - x~^a_k>,   s_i = r_{i,x}/beta + A* g~_i.
/// Expanding bilinearly, it is enough to carry sum_i s_i, sum_i <s_i, x~_i>
/// and sum_i x~_i; no trace replay is needed and memory stays O(dim).
struct ErgodicState {
  long k = 0;

  Vector sum_x_tilde, sum_y, sum_gamma_tilde;
  Vector sum_r_x, sum_r_y, sum_r_gamma;  ///< sums of z_{i-1} - z_i

  Vector sum_s_x;           ///< sum of r_{i,x}/beta + A* g~_i
  double inner_sum_x = 0.0; ///< sum of <s_i, x~_i>
  Vector sum_s_y;           ///< sum of (H + beta B*B) r_{i,y} + B* g~_i
  double inner_sum_y = 0.0; ///< sum of <s_i, y_i>

  // Accumulators for the combined epsilon written against (x~_i, y_i, g~_i);
  // its agreement with eps_x + eps_y is a checkable identity.
  double dot_rx_xtilde = 0.0;   ///< sum of <r_{i,x}/beta, x~_i>
  double dot_ry_y = 0.0;        ///< sum of <(H + beta B*B) r_{i,y}, y_i>
  double dot_rg_gtilde = 0.0;   ///< sum of <r_{i,gamma}/(theta beta), g~_i>

  static ErgodicState zero(const SplitProblem& p);
};

/// Folds one (prev -> curr) transition into the accumulators.
void ergodic_update(ErgodicState& state, const Iterate& prev, const Iterate& curr,
                    const SplitProblem& problem, double beta, double theta);

struct ErgodicReport {
  double r_a_norm = 0.0;        ///< ||r^a_k||_M
  double eps_x = 0.0;
  double eps_y = 0.0;
  double residual_bound = 0.0;  ///< 2 sqrt((1+mu) d0) / k
  double eps_bound = 0.0;       ///< 3 (1+mu)(3-2sigma) d0 / (2 (1-sigma) k)
  double feasibility_gap = 0.0; ///< ||A x~^a + B y^a - b - r^a_gamma/(theta beta)||; vanishes identically
};

ErgodicReport ergodic_report(const ErgodicState& state, const MSeminorm& m,
                             const SplitProblem& problem,
                             double d0_estimate, double sigma, double mu);

/// Averaged iterates and certificate vectors, for probing the epsilon-subgradient
/// inclusions directly.
struct ErgodicAverages {
  Vector x_tilde, y, gamma_tilde;
  Vector r_x, r_y, r_gamma;
  Vector s_x;  ///< r^a_x/beta + A* g~^a, the averaged certificate for f
  Vector s_y;  ///< (H + beta B*B) r^a_y + B* g~^a, the averaged certificate for g
};

ErgodicAverages ergodic_averages(const ErgodicState& state);

/// The single-sum epsilon over all three blocks; algebraically equal to
/// eps_x + eps_y because the gamma-block contribution telescopes.
double ergodic_eps_combined(const ErgodicState& state, const MSeminorm& m);

/// ||z_ref - z0||_M^2, an upper bound on the squared M-distance from the
/// start to the solution set when z_ref is a high-accuracy saddle point.
double d0_estimate(const Vector& x0, const Vector& y0, const Vector& g0,
                   const Vector& x_ref, const Vector& y_ref, const Vector& g_ref,
                   const MSeminorm& m);

}  // namespace pipadmm

#endif  // PIPADMM_ERGODIC_HPP_
