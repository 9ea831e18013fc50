#pragma once

#include <utility>

#include "mca/numlin.hpp"
#include "mca/types.hpp"

namespace mca {

/// A singular value of (1/n) Z1 Z2^T at least 1 - kDefaultMatchTol is
/// counted as an exact principal-angle cosine of 1 by auto_k. Exact-match
/// cosines land within ~1e-14 of 1 in double precision, while spurious
/// near-alignments of complementary random subspaces routinely reach
/// 1 - 1e-7 and occasionally 1 - 1e-11, so the threshold sits between the
/// two regimes.
inline constexpr double kDefaultMatchTol = 1e-12;

/// Whitening of one domain: x maps to Lambda^{-1/2} V^T (x - mean), which
/// has zero mean and identity covariance on the rank-r image of the sample
/// covariance.
struct Whitening {
  Vec mean;    // d
  Mat V;       // d x r, orthonormal columns spanning im(covariance)
  Vec lambda;  // r positive covariance eigenvalues, nonincreasing
  Index rank = 0;
};

/// g(x) = A x + b.
struct AffineMap {
  Mat A;
  Vec b;
};

/// Fitted matching-component model: affine maps from each domain into a
/// common k-dimensional domain, together with the whitenings they were
/// built from and the matched-sample objective value.
struct Model {
  AffineMap map1;
  AffineMap map2;
  Index k = 0;
  double objective = 0.0;
  bool truncation_tie = false;
  Whitening whitening1;
  Whitening whitening2;
};

/// Whiten a d x n sample: returns the whitening and the r x n matrix Z with
/// column j equal to Lambda^{-1/2} V^T (x_j - mean), so that Z has zero row
/// sums and (1/n) Z Z^T = I_r.
///
/// Requires n >= 2; throws RankZeroError when all points coincide.
std::pair<Whitening, Mat> normalize(const Mat& data,
                                    double rank_tol = numlin::kDefaultRankTol);

/// Fit the model on matched samples (column j of x1 corresponds to column j
/// of x2): whiten both sides, solve the projection Procrustes problem at
/// dimension k, and assemble A_i = B_i Lambda_i^{-1/2} V_i^T, b_i = -A_i mean_i.
///
/// Throws InfeasibleError when k > min(r1, r2).
Model fit(const Mat& x1, const Mat& x2, Index k,
          double rank_tol = numlin::kDefaultRankTol);

/// Column-wise A x + b.
Mat transform(const AffineMap& map, const Mat& data);

/// Data-dependent common dimension: the number of singular values of
/// (1/n) Z1 Z2^T within match_tol of 1, i.e. dim(im Z1^T intersect im Z2^T)
/// measured through principal angles. May be zero.
Index auto_k(const Mat& x1, const Mat& x2,
             double rank_tol = numlin::kDefaultRankTol,
             double match_tol = kDefaultMatchTol);

/// The exact-matching decoder: fit with k = auto_k. In the degenerate
/// k = 0 case, returns zero maps into R^1 (A_i = 0, b_i = 0) with
/// objective 0 rather than calling fit.
Model fit_exact_matching(const Mat& x1, const Mat& x2,
                         double rank_tol = numlin::kDefaultRankTol,
                         double match_tol = kDefaultMatchTol);

/// Map common-domain points back into domain `side` (1 or 2) through the
/// pseudoinverse of the fitted affine map: x = mean + A^+ z. For z in the
/// image of A, transform(reconstruct(z)) = z.
Mat reconstruct(const Model& model, int side, const Mat& common_points);

}  // namespace mca
