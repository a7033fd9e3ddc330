#ifndef PIPADMM_CONFIG_HPP_
#define PIPADMM_CONFIG_HPP_

namespace pipadmm {

/// Inner-acceptance rule used by the outer loop.
///
/// PIP uses the relative-error test
///   ||x~ - x_prev + beta*v||^2 <= tau1*||g~ - g_prev||^2 + tau2*||x~ - x_prev||^2,
/// RELERR_BASELINE uses
///   2*beta*|<x~ - x_prev, v>| + beta^2*||v||^2 <= tau1*||g~ - g_prev||^2
/// with the multiplier stepsize fixed at theta = 1 and no proximal term H.
enum class Method { PIP, RELERR_BASELINE };

struct SolverConfig {
  double beta = 1.0;    ///< penalty parameter, > 0
  double theta = 1.0;   ///< multiplier stepsize, 0 < theta < theta_upper_bound(tau1)
  double tau1 = 0.0;    ///< relative-error tolerance, in [0,1)
  double tau2 = 0.0;    ///< relative-error tolerance, in [0,1)
  double outer_tol = 1e-2;     ///< stop when the M-seminorm step length drops below this
  int max_outer = 1000;
  int max_inner = 0;           ///< inner-iteration budget; 0 means 10 * x_dim
  double inner_abs_tol = 1e-8; ///< hybrid rule also accepts when ||v|| <= this
  Method method = Method::PIP;

  /// Throws std::domain_error / std::invalid_argument on any violated constraint.
  void validate() const;

  int effective_max_inner(long x_dim) const;
};

/// Largest admissible multiplier stepsize for a given tau1:
///   (1 - 2*tau1 + sqrt((1 - 2*tau1)^2 + 4*(1 - tau1))) / (2*(1 - tau1)).
/// Equals the golden ratio at tau1 = 0 and decreases toward 1 as tau1 -> 1.
double theta_upper_bound(double tau1);

/// tau1 = 0.99 * (1 + theta - theta^2) / (theta * (2 - theta)), the largest
/// relative-error tolerance (up to the 0.99 safety factor) still compatible
/// with the stepsize theta, capped at 0.99 where the ratio exceeds 1 (every
/// tolerance is admissible for theta below ~0.99). Requires 0 < theta < 2 and
/// 1 + theta - theta^2 > 0.
double default_tau1(double theta);

}  // namespace pipadmm

#endif  // PIPADMM_CONFIG_HPP_
