#include "pipadmm/random_lasso.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace pipadmm {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

NormalStream::NormalStream(std::uint64_t seed, std::uint64_t stream_id)
    : eng_(splitmix64(seed + stream_id * 0x9e3779b97f4a7c15ULL)) {}

double NormalStream::operator()() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - static_cast<double>(eng_() >> 11) * 0x1.0p-53;  // (0,1]
  const double u2 = static_cast<double>(eng_() >> 11) * 0x1.0p-53;       // [0,1)
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(a);
  has_spare_ = true;
  return r * std::cos(a);
}

std::uint64_t NormalStream::uniform_below(std::uint64_t bound) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(eng_()) * bound) >> 64);
}

LassoInstance gen_random_lasso(const RandomLassoSpec& spec) {
  if (spec.m < 1 || spec.n < 1) {
    throw std::invalid_argument("gen_random_lasso: dimensions must be >= 1");
  }
  if (spec.sparsity < 1 || spec.sparsity > spec.n) {
    throw std::invalid_argument("gen_random_lasso: sparsity must lie in [1, n]");
  }
  if (spec.noise_scale < 0.0) {
    throw std::invalid_argument("gen_random_lasso: noise_scale must be >= 0");
  }

  NormalStream mat_stream(spec.seed, 0);
  Matrix C(spec.m, spec.n);
  for (Eigen::Index j = 0; j < spec.n; ++j) {
    for (Eigen::Index i = 0; i < spec.m; ++i) C(i, j) = mat_stream();
    const double nrm = C.col(j).norm();
    if (nrm > 0.0) C.col(j) /= nrm;
  }

  NormalStream coef_stream(spec.seed, 1);
  std::vector<Eigen::Index> idx(spec.n);
  for (Eigen::Index i = 0; i < spec.n; ++i) idx[i] = i;
  for (Eigen::Index i = 0; i < spec.sparsity; ++i) {
    const auto j = i + static_cast<Eigen::Index>(
        coef_stream.uniform_below(static_cast<std::uint64_t>(spec.n - i)));
    std::swap(idx[i], idx[j]);
  }
  Vector x = Vector::Zero(spec.n);
  for (Eigen::Index i = 0; i < spec.sparsity; ++i) x[idx[i]] = coef_stream();

  NormalStream noise_stream(spec.seed, 2);
  Vector noise(spec.m);
  for (Eigen::Index i = 0; i < spec.m; ++i) noise[i] = noise_stream();

  Vector d = C * x + spec.noise_scale * noise;
  const double delta = lasso_delta(C, d);
  return LassoInstance{std::move(C), std::move(d), delta};
}

}  // namespace pipadmm
