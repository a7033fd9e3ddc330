#include "pipadmm/config.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pipadmm {

double theta_upper_bound(double tau1) {
  if (!(tau1 >= 0.0 && tau1 < 1.0)) {
    throw std::domain_error("theta_upper_bound: tau1 must lie in [0,1)");
  }
  const double a = 1.0 - 2.0 * tau1;
  return (a + std::sqrt(a * a + 4.0 * (1.0 - tau1))) / (2.0 * (1.0 - tau1));
}

double default_tau1(double theta) {
  if (!(theta > 0.0 && theta < 2.0)) {
    throw std::domain_error("default_tau1: theta must lie in (0,2)");
  }
  const double num = 1.0 + theta - theta * theta;
  if (!(num > 0.0)) {
    throw std::domain_error("default_tau1: theta must stay below the golden ratio");
  }
  // Below theta ~ 0.99 the ratio exceeds 1; every tolerance below 1 is then
  // admissible, so cap at the same 0.99 safety factor.
  return std::min(0.99 * num / (theta * (2.0 - theta)), 0.99);
}

void SolverConfig::validate() const {
  if (!(beta > 0.0)) throw std::domain_error("SolverConfig: beta must be positive");
  if (!(tau1 >= 0.0 && tau1 < 1.0)) throw std::domain_error("SolverConfig: tau1 must lie in [0,1)");
  if (!(tau2 >= 0.0 && tau2 < 1.0)) throw std::domain_error("SolverConfig: tau2 must lie in [0,1)");
  if (!(theta > 0.0)) throw std::domain_error("SolverConfig: theta must be positive");
  if (!(theta < theta_upper_bound(tau1))) {
    throw std::domain_error("SolverConfig: theta must be strictly below theta_upper_bound(tau1)");
  }
  if (!(outer_tol > 0.0)) throw std::domain_error("SolverConfig: outer_tol must be positive");
  if (max_outer < 1) throw std::invalid_argument("SolverConfig: max_outer must be >= 1");
  if (max_inner < 0) throw std::invalid_argument("SolverConfig: max_inner must be >= 0");
  if (!(inner_abs_tol > 0.0)) throw std::domain_error("SolverConfig: inner_abs_tol must be positive");
  if (method == Method::RELERR_BASELINE && theta != 1.0) {
    throw std::invalid_argument("SolverConfig: the baseline criterion requires theta = 1");
  }
}

int SolverConfig::effective_max_inner(long x_dim) const {
  if (max_inner > 0) return max_inner;
  return static_cast<int>(10 * x_dim);
}

}  // namespace pipadmm
