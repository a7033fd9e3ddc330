#include "pipadmm/ergodic.hpp"

#include <cmath>
#include <stdexcept>

namespace pipadmm {

ErgodicState ErgodicState::zero(const SplitProblem& p) {
  ErgodicState s;
  s.sum_x_tilde = Vector::Zero(p.x_dim);
  s.sum_y = Vector::Zero(p.y_dim);
  s.sum_gamma_tilde = Vector::Zero(p.c_dim);
  s.sum_r_x = Vector::Zero(p.x_dim);
  s.sum_r_y = Vector::Zero(p.y_dim);
  s.sum_r_gamma = Vector::Zero(p.c_dim);
  s.sum_s_x = Vector::Zero(p.x_dim);
  s.sum_s_y = Vector::Zero(p.y_dim);
  return s;
}

void ergodic_update(ErgodicState& state, const Iterate& prev, const Iterate& curr,
                    const SplitProblem& problem, double beta, double theta) {
  if (curr.k != prev.k + 1) {
    throw std::invalid_argument("ergodic_update: iterates are not consecutive");
  }
  const Vector r_x = prev.x - curr.x;
  const Vector r_y = prev.y - curr.y;
  const Vector r_g = prev.gamma - curr.gamma;

  state.k += 1;
  state.sum_x_tilde += curr.x_tilde;
  state.sum_y += curr.y;
  state.sum_gamma_tilde += curr.gamma_tilde;
  state.sum_r_x += r_x;
  state.sum_r_y += r_y;
  state.sum_r_gamma += r_g;

  const Vector s_x = r_x / beta + problem.apply_At(curr.gamma_tilde);
  state.sum_s_x += s_x;
  state.inner_sum_x += s_x.dot(curr.x_tilde);

  Vector w = beta * problem.apply_Bt(problem.apply_B(r_y));
  if (problem.has_H()) w += problem.apply_H(r_y);
  const Vector s_y = w + problem.apply_Bt(curr.gamma_tilde);
  state.sum_s_y += s_y;
  state.inner_sum_y += s_y.dot(curr.y);

  state.dot_rx_xtilde += r_x.dot(curr.x_tilde) / beta;
  state.dot_ry_y += w.dot(curr.y);
  state.dot_rg_gtilde += r_g.dot(curr.gamma_tilde) / (theta * beta);
}

ErgodicAverages ergodic_averages(const ErgodicState& state) {
  if (state.k < 1) throw std::domain_error("ergodic_averages: no iterations recorded");
  const double inv_k = 1.0 / static_cast<double>(state.k);
  ErgodicAverages a;
  a.x_tilde = inv_k * state.sum_x_tilde;
  a.y = inv_k * state.sum_y;
  a.gamma_tilde = inv_k * state.sum_gamma_tilde;
  a.r_x = inv_k * state.sum_r_x;
  a.r_y = inv_k * state.sum_r_y;
  a.r_gamma = inv_k * state.sum_r_gamma;
  a.s_x = inv_k * state.sum_s_x;
  a.s_y = inv_k * state.sum_s_y;
  return a;
}

ErgodicReport ergodic_report(const ErgodicState& state, const MSeminorm& m,
                             const SplitProblem& problem,
                             double d0_estimate, double sigma, double mu) {
  if (state.k < 1) throw std::domain_error("ergodic_report: no iterations recorded");
  const double k = static_cast<double>(state.k);
  const ErgodicAverages a = ergodic_averages(state);

  ErgodicReport rep;
  rep.r_a_norm = m.norm(a.r_x, a.r_y, a.r_gamma);
  rep.eps_x = (state.inner_sum_x - state.sum_s_x.dot(a.x_tilde)) / k;
  rep.eps_y = (state.inner_sum_y - state.sum_s_y.dot(a.y)) / k;
  rep.residual_bound = 2.0 * std::sqrt((1.0 + mu) * d0_estimate) / k;
  rep.eps_bound = 3.0 * (1.0 + mu) * (3.0 - 2.0 * sigma) * d0_estimate /
                  (2.0 * (1.0 - sigma) * k);
  rep.feasibility_gap = (problem.apply_A(a.x_tilde) + problem.apply_B(a.y) - problem.b -
                         a.r_gamma / (m.theta * m.beta)).norm();
  return rep;
}

double ergodic_eps_combined(const ErgodicState& state, const MSeminorm& m) {
  if (state.k < 1) throw std::domain_error("ergodic_eps_combined: no iterations recorded");
  const double k = static_cast<double>(state.k);
  const double term_x = state.dot_rx_xtilde -
                        state.sum_r_x.dot(state.sum_x_tilde) / (m.beta * k);
  const double term_y = state.dot_ry_y -
                        m.y_block(state.sum_r_y).dot(state.sum_y) / k;
  const double term_g = state.dot_rg_gtilde -
                        state.sum_r_gamma.dot(state.sum_gamma_tilde) / (m.theta * m.beta * k);
  return (term_x + term_y + term_g) / k;
}

double d0_estimate(const Vector& x0, const Vector& y0, const Vector& g0,
                   const Vector& x_ref, const Vector& y_ref, const Vector& g_ref,
                   const MSeminorm& m) {
  return m.squared(x_ref - x0, y_ref - y0, g_ref - g0);
}

}  // namespace pipadmm
