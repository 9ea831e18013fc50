#include "mca/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "mca/errors.hpp"
#include "mca/procrustes.hpp"

namespace mca {

std::pair<Whitening, Mat> normalize(const Mat& data, double rank_tol) {
  if (data.cols() < 2)
    throw Error("normalize: need at least 2 points, got " +
                std::to_string(data.cols()));
  const double n = static_cast<double>(data.cols());
  const Vec mean = numlin::sample_mean(data);
  const Mat centered = data.colwise() - mean;

  // Whitening through the SVD of the centered data matrix: with
  // centered = U S V^T, the covariance is U (S^2/n) U^T, so the whitened
  // coordinates Lambda^{-1/2} V^T (x_j - mean) are sqrt(n) times the rows
  // of V^T. This keeps (1/n) Z Z^T = I at machine precision even when the
  // covariance is poorly conditioned. The eigenvalue threshold
  // lambda > rank_tol * lambda_1 translates to s > sqrt(rank_tol) * s_1.
  numlin::ThinSvd svd;
  try {
    svd = numlin::thin_svd(centered, std::sqrt(rank_tol));
  } catch (const RankZeroError&) {
    throw RankZeroError("normalize: all points coincide (zero covariance)");
  }

  Whitening w;
  w.mean = mean;
  w.V = svd.U;
  w.lambda = svd.sigma.array().square() / n;
  w.rank = svd.rank();

  Mat z = std::sqrt(n) * svd.V.transpose();
  return {std::move(w), std::move(z)};
}

namespace {

AffineMap assemble_map(const Mat& b, const Whitening& w) {
  AffineMap map;
  map.A = b * w.lambda.array().rsqrt().matrix().asDiagonal() * w.V.transpose();
  map.b = -(map.A * w.mean);
  return map;
}

}  // namespace

Model fit(const Mat& x1, const Mat& x2, Index k, double rank_tol) {
  if (x1.cols() != x2.cols())
    throw Error("fit: matched sample counts differ (" + std::to_string(x1.cols()) +
                " vs " + std::to_string(x2.cols()) + ")");
  if (k < 1) throw std::invalid_argument("fit: k must be >= 1");

  auto [w1, z1] = normalize(x1, rank_tol);
  auto [w2, z2] = normalize(x2, rank_tol);
  if (k > std::min(w1.rank, w2.rank)) throw InfeasibleError(k, w1.rank, w2.rank);

  const procrustes::Solution sol = procrustes::projection_procrustes(z1, z2, k);

  Model model;
  model.map1 = assemble_map(sol.B1, w1);
  model.map2 = assemble_map(sol.B2, w2);
  model.k = k;
  model.objective = sol.objective;
  model.truncation_tie = sol.truncation_tie;
  model.whitening1 = std::move(w1);
  model.whitening2 = std::move(w2);
  return model;
}

Mat transform(const AffineMap& map, const Mat& data) {
  if (data.rows() != map.A.cols())
    throw Error("transform: input dimension " + std::to_string(data.rows()) +
                " does not match map dimension " + std::to_string(map.A.cols()));
  return (map.A * data).colwise() + map.b;
}

Index auto_k(const Mat& x1, const Mat& x2, double rank_tol, double match_tol) {
  if (x1.cols() != x2.cols())
    throw Error("auto_k: matched sample counts differ");
  auto [w1, z1] = normalize(x1, rank_tol);
  auto [w2, z2] = normalize(x2, rank_tol);
  (void)w1;
  (void)w2;
  const double n = static_cast<double>(z1.cols());
  // Singular values of (1/n) Z1 Z2^T are the cosines of the principal
  // angles between the row spaces; count the ones at (numerically) 1.
  const Vec cosines = numlin::singular_values(z1 * z2.transpose() / n);
  Index k = 0;
  while (k < cosines.size() && cosines(k) >= 1.0 - match_tol) ++k;
  return k;
}

Model fit_exact_matching(const Mat& x1, const Mat& x2, double rank_tol,
                         double match_tol) {
  const Index k = auto_k(x1, x2, rank_tol, match_tol);
  if (k > 0) return fit(x1, x2, k, rank_tol);

  // Degenerate case: the common component is trivial, and the maps collapse
  // to the zero map into R^1.
  Model model;
  model.map1.A = Mat::Zero(1, x1.rows());
  model.map1.b = Vec::Zero(1);
  model.map2.A = Mat::Zero(1, x2.rows());
  model.map2.b = Vec::Zero(1);
  model.k = 0;
  model.objective = 0.0;
  model.truncation_tie = false;
  std::tie(model.whitening1, std::ignore) = normalize(x1, rank_tol);
  std::tie(model.whitening2, std::ignore) = normalize(x2, rank_tol);
  return model;
}

Mat reconstruct(const Model& model, int side, const Mat& common_points) {
  if (side != 1 && side != 2)
    throw Error("reconstruct: side must be 1 or 2, got " + std::to_string(side));
  const AffineMap& map = side == 1 ? model.map1 : model.map2;
  const Vec& mean = side == 1 ? model.whitening1.mean : model.whitening2.mean;
  if (common_points.rows() != map.A.rows())
    throw Error("reconstruct: point dimension " +
                std::to_string(common_points.rows()) +
                " does not match common dimension " + std::to_string(map.A.rows()));
  const numlin::ThinSvd svd = numlin::thin_svd(map.A);
  return (numlin::pinv_apply(svd, common_points)).colwise() + mean;
}

}  // namespace mca
