#pragma once

#include "mca/types.hpp"

namespace mca::numlin {

/// Relative singular-value threshold separating signal from roundoff noise
/// at double precision and desk-scale dimensions.
inline constexpr double kDefaultRankTol = 1e-10;

/// Thin SVD m = U diag(sigma) V^T restricted to singular values above the
/// rank threshold. U and V have orthonormal columns; sigma is strictly
/// positive and nonincreasing.
struct ThinSvd {
  Mat U;
  Vec sigma;
  Mat V;

  Index rank() const { return sigma.size(); }
};

/// Leading-k factors of an SVD: W1, W2 have orthonormal columns and sigma
/// holds the k largest singular values (zeros permitted).
struct TruncatedSvd {
  Mat W1;
  Vec sigma;
  Mat W2;
};

/// Per-coordinate average of the columns. Errors on an empty sample.
Vec sample_mean(const Mat& data);

/// (1/n) sum_j (x_j - mean)(x_j - mean)^T with denominator n. The result is
/// symmetrized as (C + C^T)/2 to remove accumulation roundoff.
Mat sample_covariance(const Mat& data, const Vec& mean);

/// Thin SVD retaining exactly the singular values s_l > rank_tol * s_1.
/// Throws RankZeroError when the matrix is (numerically) zero.
ThinSvd thin_svd(const Mat& m, double rank_tol = kDefaultRankTol);

/// Leading k singular triplets; requires k <= min(rows, cols).
TruncatedSvd truncated_svd(const Mat& m, Index k);

/// All min(rows, cols) singular values, nonincreasing.
Vec singular_values(const Mat& m);

/// Number of singular values above rank_tol * s_1.
Index numerical_rank(const Mat& m, double rank_tol = kDefaultRankTol);

/// Orthonormal basis of the null space, as columns; may have zero columns.
Mat kernel_basis(const Mat& m, double rank_tol = kDefaultRankTol);

/// V diag(1/sigma) U^T y: least-squares/minimum-norm application of the
/// pseudoinverse encoded by a thin SVD.
Vec pinv_apply(const ThinSvd& svd, const Vec& y);

/// Column-wise pinv_apply.
Mat pinv_apply(const ThinSvd& svd, const Mat& ys);

}  // namespace mca::numlin
