#ifndef PIPADMM_MONITOR_HPP_
#define PIPADMM_MONITOR_HPP_

#include <ostream>
#include <vector>

#include "pipadmm/ergodic.hpp"
#include "pipadmm/hpe.hpp"
#include "pipadmm/mseminorm.hpp"
#include "pipadmm/solver.hpp"

namespace pipadmm {

struct CertificateRow {
  int k = 0;
  double slack = 0.0;            ///< per-iteration contraction slack (>= 0 up to roundoff)
  double eta = 0.0;
  double best_step_norm = 0.0;   ///< min_{i<=k} ||z_{i-1} - z_i||_M
  double pointwise_bound = 0.0;
  double r_a_norm = 0.0;
  double ergodic_bound = 0.0;
  double eps_x = 0.0;
  double eps_y = 0.0;
  double eps_bound = 0.0;
  double feasibility_gap = 0.0;
};

struct CertificateReport {
  double sigma = 0.0;
  double mu = 0.0;
  double eta0 = 0.0;
  double d0 = 0.0;
  std::vector<CertificateRow> rows;
};

void write_certificate_csv(const CertificateReport& rep, std::ostream& os);
void write_certificate_json(const CertificateReport& rep, std::ostream& os);

/// Read-only runtime verifier. Attached to run() as an observer, it records
/// the quantities behind the contraction inequality and the pointwise /
/// ergodic residual bounds; finalize() turns them into one row per outer
/// iteration once an estimate of the initial M-distance to the solution set
/// is available. Attaching a monitor never changes the iterates.
class HpeMonitor : public IterationObserver {
 public:
  HpeMonitor(const SplitProblem& problem, const SolverConfig& config);

  void observe(const Iterate& prev, const Iterate& curr) override;

  /// Slack at iteration 1 depends on eta0 = mu * d0, so the report requires
  /// d0_estimate (typically from a reference solve at tight tolerance).
  CertificateReport finalize(double d0_estimate) const;

  /// Copies the per-iteration slacks of `finalize(d0_estimate)` into
  /// result.trace[..].hpe_slack.
  void annotate_trace(SolveResult& result, double d0_estimate) const;

  double sigma() const { return sigma_; }
  double mu() const { return mu_; }
  const MSeminorm& seminorm() const { return m_; }
  const ErgodicState& ergodic_state() const { return ergodic_; }
  int iterations() const { return static_cast<int>(etas_.size()); }

  /// Natural scale of the contraction inequality at iteration k (1-based):
  /// 1 + sigma ||z~_k - z_{k-1}||_M^2 + eta_{k-1}; relative slack tolerances
  /// should be taken against this.
  double slack_scale(int k, double d0_estimate) const;

 private:
  const SplitProblem* problem_;
  SolverConfig config_;
  MSeminorm m_;
  double sigma_ = 0.0;
  double mu_ = 0.0;

  std::vector<double> drift_sq_;   // ||z~_k - z_{k-1}||_M^2
  std::vector<double> gap_sq_;     // ||z~_k - z_k||_M^2
  std::vector<double> etas_;
  std::vector<double> step_norms_;
  std::vector<double> r_a_norms_;
  std::vector<double> eps_x_, eps_y_;
  std::vector<double> feas_gaps_;
  ErgodicState ergodic_;
};

}  // namespace pipadmm

#endif  // PIPADMM_MONITOR_HPP_
