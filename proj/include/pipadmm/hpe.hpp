#ifndef PIPADMM_HPE_HPP_
#define PIPADMM_HPE_HPP_

#include <stdexcept>
#include <vector>

#include "pipadmm/mseminorm.hpp"

namespace pipadmm {

class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The 2x2 contraction matrix whose positive semidefiniteness certifies the
/// per-iteration inequality
///   ||z~_k - z_k||_M^2 + eta_k <= sigma ||z~_k - z_{k-1}||_M^2 + eta_{k-1}.
struct ContractionMatrix {
  double g11, g12, g22;
  bool psd() const { return g11 >= 0.0 && g22 >= 0.0 && g11 * g22 - g12 * g12 >= 0.0; }
};

ContractionMatrix contraction_matrix(double sigma, double tau1, double theta);

/// Smallest sigma in [max(tau2, 0), 1) making the contraction matrix positive
/// semidefinite, by bisection to 1e-12. The matrix is affine in sigma with a
/// positive definite slope for theta < 3, so the PSD set is an interval
/// reaching up to 1 and bisection is exact.
double min_sigma(double tau1, double tau2, double theta);

struct MuEta0 {
  double mu = 0.0;
  double eta0 = 0.0;
};

/// mu = 4 [sigma - 1 + (1 - tau1) theta] / theta^{3/2} * max{1, theta/(2-theta)},
/// eta0 = mu * d0_estimate.
MuEta0 mu_and_eta0(double sigma, double tau1, double theta, double d0_estimate);

/// eta_k = [sigma - 1 + (2 - theta - tau1) theta] / (beta theta^3) ||gamma_k - gamma_{k-1}||^2
///       + [sigma - 1 + (1 - tau1) theta] / theta * ||y_k - y_{k-1}||_H^2.
/// Both bracketed coefficients are nonnegative whenever sigma comes from
/// min_sigma; a violation beyond -1e-12 raises CertificateError.
double eta_k(const Vector& gamma_diff, const Vector& y_diff,
             double sigma, double tau1, double theta, double beta,
             const LinearMap& apply_H);

/// sigma ||z~ - z_prev||_M^2 + eta_prev - ||z~ - z||_M^2 - eta_curr.
/// Nonnegative (up to roundoff) on every genuine iterate transition.
double hpe_slack(const Vector& zp_x, const Vector& zp_y, const Vector& zp_g,
                 const Vector& z_x, const Vector& z_y, const Vector& z_g,
                 const Vector& zt_x, const Vector& zt_y, const Vector& zt_g,
                 double eta_prev, double eta_curr, double sigma, const MSeminorm& m);

struct PointwiseReport {
  double best_step_norm = 0.0;  ///< min over i <= k of ||z_{i-1} - z_i||_M
  double bound = 0.0;           ///< sqrt(d0/k) * sqrt((2(1+sigma) + 4 mu) / (1-sigma))
};

/// Best single-iteration M-step length among the first k records of
/// `m_step_norms`, against the O(1/sqrt(k)) theoretical envelope.
PointwiseReport pointwise_report(const std::vector<double>& m_step_norms,
                                 double d0_estimate, double sigma, double mu, int k);

}  // namespace pipadmm

#endif  // PIPADMM_HPE_HPP_
