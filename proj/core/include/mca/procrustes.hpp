#pragma once

#include "mca/types.hpp"

namespace mca::procrustes {

/// Accepted max-abs deviation of (1/n) Z Z^T from the identity before an
/// input is rejected as non-whitened.
inline constexpr double kWhiteningTol = 1e-6;

/// Two leading singular values closer than this (relative to the largest)
/// are reported as a truncation tie; the returned subspace is then one of
/// several optima.
inline constexpr double kTieRelTol = 1e-10;

struct Solution {
  Mat B1;  // k x r1, orthonormal rows
  Mat B2;  // k x r2, orthonormal rows
  double objective = 0.0;    // (1/n) ||B1 Z1 - B2 Z2||_F^2 at the optimum
  Vec top_singular_values;   // k leading singular values of (1/n) Z1 Z2^T
  bool truncation_tie = false;
};

/// Minimize (1/n) ||B1 Z1 - B2 Z2||_F^2 over B_i with orthonormal rows
/// (the projection Procrustes problem). Inputs must satisfy
/// (1/n) Z_i Z_i^T = I within kWhiteningTol; the optimum is read off the
/// k-truncated SVD of Z1 Z2^T.
///
/// Throws std::invalid_argument for k < 1, InfeasibleError for
/// k > min(r1, r2), NotWhitenedError when the precondition fails.
Solution projection_procrustes(const Mat& z1, const Mat& z2, Index k);

/// (1/n) ||B1 Z1 - B2 Z2||_F^2 for arbitrary feasible or infeasible inputs.
double objective(const Mat& b1, const Mat& b2, const Mat& z1, const Mat& z2);

/// max |(1/n) Z Z^T - I|, the quantity checked against kWhiteningTol.
double whitening_deviation(const Mat& z);

}  // namespace mca::procrustes
