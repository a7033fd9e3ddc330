#include "pipadmm/solver.hpp"

#include <cmath>
#include <limits>

#include "pipadmm/mseminorm.hpp"

namespace pipadmm {

Vector gamma_tilde(const Vector& gamma_prev, const Vector& x_tilde,
                   const Vector& y_prev, const SplitProblem& problem, double beta) {
  if (x_tilde.size() != problem.x_dim || y_prev.size() != problem.y_dim ||
      gamma_prev.size() != problem.c_dim) {
    throw std::invalid_argument("gamma_tilde: dimension mismatch");
  }
  return gamma_prev - beta * (problem.apply_A(x_tilde) + problem.apply_B(y_prev) - problem.b);
}

bool relative_error_holds(const Vector& x_tilde, const Vector& x_prev, const Vector& v,
                          const Vector& g_tilde, const Vector& g_prev,
                          double beta, double tau1, double tau2) {
  const double lhs = (x_tilde - x_prev + beta * v).squaredNorm();
  const double rhs = tau1 * (g_tilde - g_prev).squaredNorm() +
                     tau2 * (x_tilde - x_prev).squaredNorm();
  return lhs <= rhs;
}

bool relerr_baseline_holds(const Vector& x_tilde, const Vector& x_prev, const Vector& v,
                           const Vector& g_tilde, const Vector& g_prev,
                           double beta, double tau1) {
  const double lhs = 2.0 * beta * std::abs((x_tilde - x_prev).dot(v)) +
                     beta * beta * v.squaredNorm();
  return lhs <= tau1 * (g_tilde - g_prev).squaredNorm();
}

namespace {

AcceptFn make_hybrid_accept(const Iterate& state, const SplitProblem& problem,
                            const SolverConfig& config) {
  // B y_prev - b is fixed across inner candidates; hoist it.
  const Vector by_minus_b = problem.apply_B(state.y) - problem.b;
  const Vector x_prev = state.x;
  const Vector g_prev = state.gamma;
  return [&problem, &config, by_minus_b, x_prev, g_prev](const Vector& x_tilde,
                                                         const Vector& v) {
    if (v.norm() <= config.inner_abs_tol) return true;
    const Vector g_tilde = g_prev - config.beta * (problem.apply_A(x_tilde) + by_minus_b);
    if (config.method == Method::RELERR_BASELINE) {
      return relerr_baseline_holds(x_tilde, x_prev, v, g_tilde, g_prev,
                                   config.beta, config.tau1);
    }
    return relative_error_holds(x_tilde, x_prev, v, g_tilde, g_prev,
                                config.beta, config.tau1, config.tau2);
  };
}

}  // namespace

Iterate step(const Iterate& state, const SplitProblem& problem, const SolverConfig& config) {
  const AcceptFn accept = make_hybrid_accept(state, problem, config);
  OracleResult inner = problem.x_oracle(state.x, state.y, state.gamma, config, accept);
  if (!inner.accepted) {
    throw InnerSolveFailure("step: inner budget exhausted without an accepted candidate");
  }

  Iterate next;
  next.k = state.k + 1;
  next.inner_iters = inner.inner_iters;
  next.x_tilde = std::move(inner.x_tilde);
  next.v = std::move(inner.v);
  next.gamma_tilde = gamma_tilde(state.gamma, next.x_tilde, state.y, problem, config.beta);
  next.y = problem.y_prox(next.x_tilde, state.gamma, state.y, config);
  next.x = state.x - config.beta * next.v;
  next.gamma = state.gamma - config.theta * config.beta *
               (problem.apply_A(next.x_tilde) + problem.apply_B(next.y) - problem.b);
  return next;
}

SolveResult run(const SplitProblem& problem, const SolverConfig& config,
                const Vector& x0, const Vector& y0, const Vector& gamma0,
                IterationObserver* observer) {
  config.validate();
  if (config.method == Method::RELERR_BASELINE && problem.has_H()) {
    throw std::invalid_argument("run: the baseline criterion requires H = 0");
  }
  if (x0.size() != problem.x_dim || y0.size() != problem.y_dim ||
      gamma0.size() != problem.c_dim) {
    throw std::invalid_argument("run: start dimensions do not match the problem");
  }

  const MSeminorm m = MSeminorm::from(problem, config);

  SolveResult result;
  Iterate curr;
  curr.k = 0;
  curr.x = x0;
  curr.x_tilde = x0;
  curr.y = y0;
  curr.gamma = gamma0;
  curr.gamma_tilde = gamma0;
  curr.v = Vector::Zero(problem.x_dim);

  for (int k = 1; k <= config.max_outer; ++k) {
    Iterate next;
    try {
      next = step(curr, problem, config);
    } catch (const InnerSolveFailure&) {
      result.status = Status::INNER_FAILURE;
      result.final_iterate = curr;
      return result;
    }

    TraceRecord rec;
    rec.k = k;
    rec.m_step_norm = m.norm(next.x - curr.x, next.y - curr.y, next.gamma - curr.gamma);
    rec.inner_iters = next.inner_iters;
    rec.hpe_slack = std::numeric_limits<double>::quiet_NaN();
    result.trace.push_back(rec);
    result.total_inner_count += next.inner_iters;
    result.outer_count = k;

    if (observer) observer->observe(curr, next);
    curr = std::move(next);

    if (rec.m_step_norm <= config.outer_tol) {
      result.status = Status::CONVERGED;
      result.final_iterate = curr;
      return result;
    }
  }
  result.status = Status::MAX_ITER;
  result.final_iterate = curr;
  return result;
}

void write_trace_csv(const SolveResult& result, std::ostream& os) {
  os << "k,m_step_norm,inner_iters,hpe_slack\n";
  const auto prec = os.precision(17);
  for (const TraceRecord& r : result.trace) {
    os << r.k << ',' << r.m_step_norm << ',' << r.inner_iters << ',' << r.hpe_slack << '\n';
  }
  os.precision(prec);
}

}  // namespace pipadmm
