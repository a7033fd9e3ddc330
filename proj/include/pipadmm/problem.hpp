#ifndef PIPADMM_PROBLEM_HPP_
#define PIPADMM_PROBLEM_HPP_

#include <Eigen/Dense>
#include <cstdint>
#include <functional>

#include "pipadmm/config.hpp"

namespace pipadmm {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// A linear map between the problem's vector spaces, applied functionally so
/// structured operators (negated identity, matrix-free normal equations, ...)
/// never materialize a matrix.
using LinearMap = std::function<Vector(const Vector&)>;

/// Inner-acceptance callback handed to the x-oracle. Called once per inner
/// candidate (x_tilde, v); returns true when the hybrid stopping rule holds.
using AcceptFn = std::function<bool(const Vector& x_tilde, const Vector& v)>;

/// What an x-oracle hands back to the outer loop.
struct OracleResult {
  Vector x_tilde;
  Vector v;            ///< certificate vector, an element of df(x_tilde) - A* g_tilde
  int inner_iters = 0;
  bool accepted = false;
};

using XOracle = std::function<OracleResult(
    const Vector& x_prev, const Vector& y_prev, const Vector& gamma_prev,
    const SolverConfig& config, const AcceptFn& accept)>;

using YProx = std::function<Vector(
    const Vector& x_tilde, const Vector& gamma_prev, const Vector& y_prev,
    const SolverConfig& config)>;

/// A two-block split instance  min { f(x) + g(y) : A x + B y = b }.
///
/// f enters only through x_oracle (which must return v in df(x~) - A* g~
/// together with x~); g enters only through y_prox (the exact minimizer of
/// the y-subproblem). apply_H is the optional proximal operator on the
/// y-subproblem; an empty std::function means H = 0.
struct SplitProblem {
  Eigen::Index x_dim = 0;
  Eigen::Index y_dim = 0;
  Eigen::Index c_dim = 0;

  LinearMap apply_A;   ///< constraint space <- x space
  LinearMap apply_At;
  LinearMap apply_B;   ///< constraint space <- y space
  LinearMap apply_Bt;
  Vector b;

  XOracle x_oracle;
  YProx y_prox;

  LinearMap apply_H;   ///< optional; empty means H = 0

  bool has_H() const { return static_cast<bool>(apply_H); }
  Vector H(const Vector& v) const { return has_H() ? apply_H(v) : Vector::Zero(v.size()); }
};

/// Randomized structural checks: adjoint consistency of (A, At) and (B, Bt)
/// to 1e-10 relative, and symmetry / positive semidefiniteness of H up to
/// -1e-12 * ||v||^2. Throws std::runtime_error naming the failing operator.
/// `trials` probe vectors are drawn from a generator seeded with `seed`.
void check_problem_structure(const SplitProblem& p, int trials = 8,
                             std::uint64_t seed = 0x5eed);

}  // namespace pipadmm

#endif  // PIPADMM_PROBLEM_HPP_
