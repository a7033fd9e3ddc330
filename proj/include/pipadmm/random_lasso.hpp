#ifndef PIPADMM_RANDOM_LASSO_HPP_
#define PIPADMM_RANDOM_LASSO_HPP_

#include <cstdint>
#include <random>

#include "pipadmm/lasso.hpp"

namespace pipadmm {

/// Standard-normal stream over a seeded mt19937_64 engine. Uniform doubles are
/// produced as (x >> 11) * 2^-53 and paired through Box-Muller, so the draw
/// sequence is bit-identical across platforms (std::normal_distribution is
/// implementation-defined and would not be).
class NormalStream {
 public:
  /// Engines for distinct stream ids are independent substreams of `seed`;
  /// the engine seed is a SplitMix64 mix of seed + stream_id * golden gamma.
  NormalStream(std::uint64_t seed, std::uint64_t stream_id);

  double operator()();

  /// Uniform integer in [0, bound) via the multiply-shift reduction.
  std::uint64_t uniform_below(std::uint64_t bound);

 private:
  std::mt19937_64 eng_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

struct RandomLassoSpec {
  Eigen::Index m = 0;
  Eigen::Index n = 0;
  std::uint64_t seed = 0;
  Eigen::Index sparsity = 100;          ///< nonzeros in the planted coefficient vector
  double noise_scale = 0.0316227766016838;  ///< sqrt(0.001)
};

/// Draws C (standard normal, filled column by column, then unit-norm columns),
/// a planted `sparsity`-sparse coefficient vector (positions by partial
/// Fisher-Yates, then values), and a noise vector, each from its own
/// substream (ids 0, 1, 2); sets d = C x + noise_scale * noise and
/// delta = 0.1 ||C^T d||_inf. Identical specs produce bit-identical instances.
LassoInstance gen_random_lasso(const RandomLassoSpec& spec);

}  // namespace pipadmm

#endif  // PIPADMM_RANDOM_LASSO_HPP_
