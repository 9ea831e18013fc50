#include "mca/rng.hpp"

#include <Eigen/LU>
#include <Eigen/QR>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mca::rng {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

Sampler::Sampler(std::uint64_t seed, std::uint64_t stream) {
  // Mix seed and stream so that nearby pairs give unrelated engines.
  std::uint64_t state = seed;
  std::uint64_t a = splitmix64(state);
  state ^= 0x6a09e667f3bcc909ull + stream * 0x9e3779b97f4a7c15ull;
  std::uint64_t b = splitmix64(state);
  engine_.seed(a ^ (b << 1));
}

double Sampler::uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Sampler::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = 0.0;
  do {
    u1 = uniform01();
  } while (u1 <= 0.0);
  const double u2 = uniform01();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

std::uint64_t Sampler::uniform_index(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("uniform_index: n must be positive");
  // Rejection sampling on the top bits; unbiased for every n.
  const std::uint64_t limit = n * (UINT64_MAX / n);
  std::uint64_t draw = 0;
  do {
    draw = engine_();
  } while (draw >= limit);
  return draw % n;
}

Vec Sampler::gaussian_vec(Index d) {
  Vec v(d);
  for (Index i = 0; i < d; ++i) v(i) = gaussian();
  return v;
}

Mat Sampler::gaussian_mat(Index rows, Index cols) {
  Mat m(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) m(i, j) = gaussian();
  return m;
}

Mat haar_orthogonal(Index d, Sampler& sampler) {
  const Mat g = sampler.gaussian_mat(d, d);
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ() * Mat::Identity(d, d);
  const Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index j = 0; j < d; ++j) {
    if (r(j, j) < 0.0) q.col(j) = -q.col(j);
  }
  return q;
}

Mat random_rotation3(Sampler& sampler) {
  Mat q = haar_orthogonal(3, sampler);
  if (q.determinant() < 0.0) q.col(0) = -q.col(0);
  return q;
}

std::vector<Index> sample_without_replacement(Index population, Index count,
                                              Sampler& sampler) {
  if (count > population)
    throw std::invalid_argument("sample_without_replacement: count exceeds population");
  std::vector<Index> pool(static_cast<std::size_t>(population));
  for (Index i = 0; i < population; ++i) pool[static_cast<std::size_t>(i)] = i;
  std::vector<Index> out(static_cast<std::size_t>(count));
  for (Index i = 0; i < count; ++i) {
    const auto j = static_cast<Index>(
        sampler.uniform_index(static_cast<std::uint64_t>(population - i)));
    std::swap(pool[static_cast<std::size_t>(i)],
              pool[static_cast<std::size_t>(i + j)]);
    out[static_cast<std::size_t>(i)] = pool[static_cast<std::size_t>(i)];
  }
  return out;
}

}  // namespace mca::rng
