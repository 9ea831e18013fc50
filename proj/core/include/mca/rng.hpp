#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mca/types.hpp"

namespace mca::rng {

/// SplitMix64 step; used to derive independent streams from (seed, stream).
std::uint64_t splitmix64(std::uint64_t& state);

/// Deterministic sampler: a std::mt19937_64 engine (bit-reproducible across
/// standard libraries) combined with hand-rolled distributions, so that
/// identical (seed, stream) pairs produce identical draws everywhere.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed, std::uint64_t stream = 0);

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01();

  /// Standard normal via Box-Muller (caches the spare deviate).
  double gaussian();

  /// Unbiased integer in [0, n); n must be positive.
  std::uint64_t uniform_index(std::uint64_t n);

  Vec gaussian_vec(Index d);
  Mat gaussian_mat(Index rows, Index cols);

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Haar-distributed orthogonal d x d matrix (QR of a Gaussian matrix with
/// the sign convention fixed from the diagonal of R).
Mat haar_orthogonal(Index d, Sampler& sampler);

/// Uniform random rotation in SO(3).
Mat random_rotation3(Sampler& sampler);

/// `count` distinct indices drawn uniformly from [0, population).
std::vector<Index> sample_without_replacement(Index population, Index count,
                                              Sampler& sampler);

}  // namespace mca::rng
