#include "pipadmm/hpe.hpp"

#include <algorithm>
#include <cmath>

#include "pipadmm/config.hpp"

namespace pipadmm {

ContractionMatrix contraction_matrix(double sigma, double tau1, double theta) {
  ContractionMatrix g;
  g.g11 = sigma - 1.0 + (sigma - tau1) * theta;
  g.g12 = (1.0 - theta) * (sigma - 1.0 + (1.0 - tau1) * theta);
  g.g22 = sigma - 1.0 + (2.0 - theta - tau1) * theta;
  return g;
}

double min_sigma(double tau1, double tau2, double theta) {
  if (!(tau1 >= 0.0 && tau1 < 1.0) || !(tau2 >= 0.0 && tau2 < 1.0)) {
    throw std::domain_error("min_sigma: tau1, tau2 must lie in [0,1)");
  }
  if (!(theta > 0.0 && theta < theta_upper_bound(tau1))) {
    throw std::domain_error("min_sigma: theta out of the admissible range");
  }
  double lo = std::max(tau2, 0.0);
  if (contraction_matrix(lo, tau1, theta).psd()) return lo;
  double hi = 1.0 - 1e-15;
  if (!contraction_matrix(hi, tau1, theta).psd()) {
    throw CertificateError("min_sigma: no sigma < 1 yields a PSD contraction matrix");
  }
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (contraction_matrix(mid, tau1, theta).psd()) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

MuEta0 mu_and_eta0(double sigma, double tau1, double theta, double d0_estimate) {
  if (d0_estimate < 0.0) throw std::domain_error("mu_and_eta0: d0_estimate must be >= 0");
  const double num = sigma - 1.0 + (1.0 - tau1) * theta;
  const double mu = 4.0 * num / std::pow(theta, 1.5) *
                    std::max(1.0, theta / (2.0 - theta));
  if (mu < -1e-12) {
    throw CertificateError("mu_and_eta0: negative mu; sigma inconsistent with (tau1, theta)");
  }
  return MuEta0{std::max(mu, 0.0), std::max(mu, 0.0) * d0_estimate};
}

double eta_k(const Vector& gamma_diff, const Vector& y_diff,
             double sigma, double tau1, double theta, double beta,
             const LinearMap& apply_H) {
  const double c_gamma = (sigma - 1.0 + (2.0 - theta - tau1) * theta) / (beta * theta * theta * theta);
  const double c_y = (sigma - 1.0 + (1.0 - tau1) * theta) / theta;
  if (c_gamma < -1e-12 || c_y < -1e-12) {
    throw CertificateError("eta_k: negative coefficient; sigma below the PSD threshold");
  }
  double eta = std::max(c_gamma, 0.0) * gamma_diff.squaredNorm();
  if (apply_H) eta += std::max(c_y, 0.0) * apply_H(y_diff).dot(y_diff);
  return eta;
}

double hpe_slack(const Vector& zp_x, const Vector& zp_y, const Vector& zp_g,
                 const Vector& z_x, const Vector& z_y, const Vector& z_g,
                 const Vector& zt_x, const Vector& zt_y, const Vector& zt_g,
                 double eta_prev, double eta_curr, double sigma, const MSeminorm& m) {
  const double drift = m.squared(zt_x - zp_x, zt_y - zp_y, zt_g - zp_g);
  const double gap = m.squared(zt_x - z_x, zt_y - z_y, zt_g - z_g);
  return sigma * drift + eta_prev - gap - eta_curr;
}

PointwiseReport pointwise_report(const std::vector<double>& m_step_norms,
                                 double d0_estimate, double sigma, double mu, int k) {
  if (k < 1 || static_cast<std::size_t>(k) > m_step_norms.size()) {
    throw std::domain_error("pointwise_report: k out of range");
  }
  if (!(sigma >= 0.0 && sigma < 1.0)) {
    throw std::domain_error("pointwise_report: sigma must lie in [0,1)");
  }
  PointwiseReport rep;
  rep.best_step_norm = *std::min_element(m_step_norms.begin(), m_step_norms.begin() + k);
  rep.bound = std::sqrt(d0_estimate / k) *
              std::sqrt((2.0 * (1.0 + sigma) + 4.0 * mu) / (1.0 - sigma));
  return rep;
}

}  // namespace pipadmm
