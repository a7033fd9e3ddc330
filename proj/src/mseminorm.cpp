#include "pipadmm/mseminorm.hpp"

#include <cmath>
#include <stdexcept>

namespace pipadmm {

double MSeminorm::squared(const Vector& zx, const Vector& zy, const Vector& zg) const {
  double q = zx.squaredNorm() / beta + zg.squaredNorm() / (theta * beta);
  double ymag = 0.0;
  if (apply_H) {
    const double hy = apply_H(zy).dot(zy);
    ymag += std::abs(hy);
    q += hy;
  }
  q += beta * apply_B(zy).squaredNorm();
  const double scale = 1.0 + zx.squaredNorm() + zy.squaredNorm() + zg.squaredNorm() + ymag;
  if (q < -1e-12 * scale) {
    throw std::runtime_error("MSeminorm: negative quadratic form; H or B inconsistent");
  }
  return q < 0.0 ? 0.0 : q;
}

double MSeminorm::norm(const Vector& zx, const Vector& zy, const Vector& zg) const {
  return std::sqrt(squared(zx, zy, zg));
}

Vector MSeminorm::y_block(const Vector& zy) const {
  Vector out = beta * apply_Bt(apply_B(zy));
  if (apply_H) out += apply_H(zy);
  return out;
}

}  // namespace pipadmm
