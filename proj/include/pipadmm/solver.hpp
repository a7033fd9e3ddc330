#ifndef PIPADMM_SOLVER_HPP_
#define PIPADMM_SOLVER_HPP_

#include <ostream>
#include <stdexcept>
#include <vector>

#include "pipadmm/config.hpp"
#include "pipadmm/problem.hpp"

namespace pipadmm {

/// Full state after one outer iteration.
struct Iterate {
  int k = 0;
  Vector x, x_tilde;
  Vector y;
  Vector gamma, gamma_tilde;
  Vector v;              ///< inner residual accepted this iteration
  int inner_iters = 0;
};

struct TraceRecord {
  int k = 0;
  double m_step_norm = 0.0;  ///< ||z_k - z_{k-1}||_M
  int inner_iters = 0;
  double hpe_slack = 0.0;    ///< NaN unless filled in by a certificate monitor
};

enum class Status { CONVERGED, MAX_ITER, INNER_FAILURE };

struct SolveResult {
  Iterate final_iterate;
  int outer_count = 0;
  long total_inner_count = 0;
  std::vector<TraceRecord> trace;
  Status status = Status::MAX_ITER;
};

/// Thrown by step() when the x-oracle exhausts its inner budget without an
/// accepted candidate. run() converts it into Status::INNER_FAILURE.
class InnerSolveFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Read-only observer invoked after every completed outer iteration.
/// Attaching one must not change the iterates.
class IterationObserver {
 public:
  virtual ~IterationObserver() = default;
  virtual void observe(const Iterate& prev, const Iterate& curr) = 0;
};

/// g~ = g_prev - beta * (A x~ + B y_prev - b).
Vector gamma_tilde(const Vector& gamma_prev, const Vector& x_tilde,
                   const Vector& y_prev, const SplitProblem& problem, double beta);

/// Relative-error acceptance:
///   ||x~ - x_prev + beta v||^2 <= tau1 ||g~ - g_prev||^2 + tau2 ||x~ - x_prev||^2,
/// ties accept.
bool relative_error_holds(const Vector& x_tilde, const Vector& x_prev, const Vector& v,
                          const Vector& g_tilde, const Vector& g_prev,
                          double beta, double tau1, double tau2);

/// Baseline acceptance:
///   2 beta |<x~ - x_prev, v>| + beta^2 ||v||^2 <= tau1 ||g~ - g_prev||^2.
bool relerr_baseline_holds(const Vector& x_tilde, const Vector& x_prev, const Vector& v,
                           const Vector& g_tilde, const Vector& g_prev,
                           double beta, double tau1);

/// One outer iteration from `state` (the (k-1)-th iterate):
///  - (x~, v) from the x-oracle under the hybrid rule
///    (method's relative-error test OR ||v|| <= inner_abs_tol),
///  - y from the exact y-subproblem,
///  - x = x_prev - beta v,  gamma = gamma_prev - theta beta (A x~ + B y - b).
/// Throws InnerSolveFailure when the oracle cannot produce an accepted pair.
Iterate step(const Iterate& state, const SplitProblem& problem, const SolverConfig& config);

/// Repeats step() until ||z_k - z_{k-1}||_M <= outer_tol or max_outer is hit.
/// Deterministic given identical inputs. `observer` (optional) sees every
/// (prev, curr) transition.
SolveResult run(const SplitProblem& problem, const SolverConfig& config,
                const Vector& x0, const Vector& y0, const Vector& gamma0,
                IterationObserver* observer = nullptr);

/// One CSV row per outer iteration: k, m_step_norm, inner_iters, hpe_slack.
void write_trace_csv(const SolveResult& result, std::ostream& os);

}  // namespace pipadmm

#endif  // PIPADMM_SOLVER_HPP_
