#include "pipadmm/monitor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <nlohmann/json.hpp>

namespace pipadmm {

HpeMonitor::HpeMonitor(const SplitProblem& problem, const SolverConfig& config)
    : problem_(&problem), config_(config), m_(MSeminorm::from(problem, config)) {
  config_.validate();
  sigma_ = min_sigma(config_.tau1, config_.tau2, config_.theta);
  mu_ = mu_and_eta0(sigma_, config_.tau1, config_.theta, 0.0).mu;
  ergodic_ = ErgodicState::zero(problem);
}

void HpeMonitor::observe(const Iterate& prev, const Iterate& curr) {
  // z~_k = (x~_k, y_k, g~_k); its y-component coincides with z_k's.
  drift_sq_.push_back(m_.squared(curr.x_tilde - prev.x, curr.y - prev.y,
                                 curr.gamma_tilde - prev.gamma));
  gap_sq_.push_back(m_.squared(curr.x_tilde - curr.x, Vector::Zero(curr.y.size()),
                               curr.gamma_tilde - curr.gamma));
  etas_.push_back(eta_k(curr.gamma - prev.gamma, curr.y - prev.y,
                        sigma_, config_.tau1, config_.theta, config_.beta,
                        problem_->apply_H));
  step_norms_.push_back(m_.norm(curr.x - prev.x, curr.y - prev.y, curr.gamma - prev.gamma));

  ergodic_update(ergodic_, prev, curr, *problem_, config_.beta, config_.theta);
  const ErgodicReport er = ergodic_report(ergodic_, m_, *problem_, 0.0, sigma_, mu_);
  r_a_norms_.push_back(er.r_a_norm);
  eps_x_.push_back(er.eps_x);
  eps_y_.push_back(er.eps_y);
  feas_gaps_.push_back(er.feasibility_gap);
}

CertificateReport HpeMonitor::finalize(double d0_estimate) const {
  CertificateReport rep;
  rep.sigma = sigma_;
  rep.mu = mu_;
  rep.d0 = d0_estimate;
  rep.eta0 = mu_and_eta0(sigma_, config_.tau1, config_.theta, d0_estimate).eta0;

  double best = std::numeric_limits<double>::infinity();
  const int n = static_cast<int>(etas_.size());
  rep.rows.reserve(n);
  for (int i = 0; i < n; ++i) {
    CertificateRow row;
    row.k = i + 1;
    const double eta_prev = (i == 0) ? rep.eta0 : etas_[i - 1];
    row.slack = sigma_ * drift_sq_[i] + eta_prev - gap_sq_[i] - etas_[i];
    row.eta = etas_[i];
    best = std::min(best, step_norms_[i]);
    row.best_step_norm = best;
    row.pointwise_bound = std::sqrt(d0_estimate / row.k) *
                          std::sqrt((2.0 * (1.0 + sigma_) + 4.0 * mu_) / (1.0 - sigma_));
    row.r_a_norm = r_a_norms_[i];
    row.ergodic_bound = 2.0 * std::sqrt((1.0 + mu_) * d0_estimate) / row.k;
    row.eps_x = eps_x_[i];
    row.eps_y = eps_y_[i];
    row.eps_bound = 3.0 * (1.0 + mu_) * (3.0 - 2.0 * sigma_) * d0_estimate /
                    (2.0 * (1.0 - sigma_) * row.k);
    row.feasibility_gap = feas_gaps_[i];
    rep.rows.push_back(row);
  }
  return rep;
}

double HpeMonitor::slack_scale(int k, double d0_estimate) const {
  if (k < 1 || k > static_cast<int>(etas_.size())) {
    throw std::domain_error("slack_scale: k out of range");
  }
  const double eta_prev =
      (k == 1) ? mu_and_eta0(sigma_, config_.tau1, config_.theta, d0_estimate).eta0
               : etas_[k - 2];
  return 1.0 + sigma_ * drift_sq_[k - 1] + eta_prev;
}

void HpeMonitor::annotate_trace(SolveResult& result, double d0_estimate) const {
  const CertificateReport rep = finalize(d0_estimate);
  const std::size_t n = std::min(rep.rows.size(), result.trace.size());
  for (std::size_t i = 0; i < n; ++i) {
    result.trace[i].hpe_slack = rep.rows[i].slack;
  }
}

void write_certificate_csv(const CertificateReport& rep, std::ostream& os) {
  const auto prec = os.precision(17);
  os << "k,slack,eta,best_step_norm,pointwise_bound,r_a_norm,ergodic_bound,"
        "eps_x,eps_y,eps_bound,feasibility_gap\n";
  for (const CertificateRow& r : rep.rows) {
    os << r.k << ',' << r.slack << ',' << r.eta << ',' << r.best_step_norm << ','
       << r.pointwise_bound << ',' << r.r_a_norm << ',' << r.ergodic_bound << ','
       << r.eps_x << ',' << r.eps_y << ',' << r.eps_bound << ','
       << r.feasibility_gap << '\n';
  }
  os.precision(prec);
}

void write_certificate_json(const CertificateReport& rep, std::ostream& os) {
  nlohmann::json j;
  j["sigma"] = rep.sigma;
  j["mu"] = rep.mu;
  j["eta0"] = rep.eta0;
  j["d0"] = rep.d0;
  j["rows"] = nlohmann::json::array();
  for (const CertificateRow& r : rep.rows) {
    j["rows"].push_back({{"k", r.k},
                         {"slack", r.slack},
                         {"eta", r.eta},
                         {"best_step_norm", r.best_step_norm},
                         {"pointwise_bound", r.pointwise_bound},
                         {"r_a_norm", r.r_a_norm},
                         {"ergodic_bound", r.ergodic_bound},
                         {"eps_x", r.eps_x},
                         {"eps_y", r.eps_y},
                         {"eps_bound", r.eps_bound},
                         {"feasibility_gap", r.feasibility_gap}});
  }
  os << j.dump(2) << '\n';
}

}  // namespace pipadmm
