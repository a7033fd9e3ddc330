#include "pipadmm/problem.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace pipadmm {

namespace {

Vector probe(std::mt19937_64& rng, Eigen::Index n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = u(rng);
  return v;
}

void check_adjoint(const LinearMap& fwd, const LinearMap& adj,
                   Eigen::Index dom, Eigen::Index ran,
                   const std::string& name, int trials, std::mt19937_64& rng) {
  for (int t = 0; t < trials; ++t) {
    const Vector u = probe(rng, dom);
    const Vector w = probe(rng, ran);
    const double lhs = fwd(u).dot(w);
    const double rhs = u.dot(adj(w));
    const double scale = 1.0 + std::abs(lhs) + std::abs(rhs);
    if (std::abs(lhs - rhs) > 1e-10 * scale) {
      throw std::runtime_error("check_problem_structure: adjoint mismatch for " + name);
    }
  }
}

}  // namespace

void check_problem_structure(const SplitProblem& p, int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  check_adjoint(p.apply_A, p.apply_At, p.x_dim, p.c_dim, "A", trials, rng);
  check_adjoint(p.apply_B, p.apply_Bt, p.y_dim, p.c_dim, "B", trials, rng);
  if (p.b.size() != p.c_dim) {
    throw std::runtime_error("check_problem_structure: b has wrong dimension");
  }
  if (p.has_H()) {
    for (int t = 0; t < trials; ++t) {
      const Vector v = probe(rng, p.y_dim);
      const Vector w = probe(rng, p.y_dim);
      const double sym = p.apply_H(v).dot(w) - v.dot(p.apply_H(w));
      if (std::abs(sym) > 1e-10 * (1.0 + v.norm() * w.norm())) {
        throw std::runtime_error("check_problem_structure: H is not self-adjoint");
      }
      if (p.apply_H(v).dot(v) < -1e-12 * v.squaredNorm()) {
        throw std::runtime_error("check_problem_structure: H is not positive semidefinite");
      }
    }
  }
}

}  // namespace pipadmm
