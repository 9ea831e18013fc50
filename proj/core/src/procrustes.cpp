#include "mca/procrustes.hpp"

#include <stdexcept>
#include <string>

#include "mca/errors.hpp"
#include "mca/numlin.hpp"

namespace mca::procrustes {

double whitening_deviation(const Mat& z) {
  const double n = static_cast<double>(z.cols());
  const Mat gram = (z * z.transpose()) / n;
  return (gram - Mat::Identity(z.rows(), z.rows())).cwiseAbs().maxCoeff();
}

double objective(const Mat& b1, const Mat& b2, const Mat& z1, const Mat& z2) {
  if (b1.cols() != z1.rows() || b2.cols() != z2.rows())
    throw Error("procrustes objective: B/Z inner dimensions do not match");
  if (b1.rows() != b2.rows())
    throw Error("procrustes objective: B1 and B2 have different heights");
  if (z1.cols() != z2.cols())
    throw Error("procrustes objective: Z1 and Z2 have different sample counts");
  const double n = static_cast<double>(z1.cols());
  return (b1 * z1 - b2 * z2).squaredNorm() / n;
}

Solution projection_procrustes(const Mat& z1, const Mat& z2, Index k) {
  if (k < 1) throw std::invalid_argument("projection_procrustes: k must be >= 1");
  if (z1.cols() != z2.cols())
    throw Error("projection_procrustes: sample counts differ (" +
                std::to_string(z1.cols()) + " vs " + std::to_string(z2.cols()) + ")");
  const Index r1 = z1.rows();
  const Index r2 = z2.rows();
  if (k > std::min(r1, r2)) throw InfeasibleError(k, r1, r2);
  for (const Mat* z : {&z1, &z2}) {
    const double dev = whitening_deviation(*z);
    if (dev > kWhiteningTol) throw NotWhitenedError(dev);
  }

  const double n = static_cast<double>(z1.cols());
  const Mat cross = z1 * z2.transpose();
  const numlin::TruncatedSvd svd = numlin::truncated_svd(cross, k);

  Solution sol;
  sol.B1 = svd.W1.transpose();
  sol.B2 = svd.W2.transpose();
  sol.objective = objective(sol.B1, sol.B2, z1, z2);
  sol.top_singular_values = svd.sigma / n;

  // A repeated singular value at the truncation boundary means the optimal
  // subspace is not unique; surface that instead of resolving it.
  if (k < std::min(r1, r2)) {
    const Vec all = numlin::singular_values(cross);
    const double top = all(0);
    sol.truncation_tie = (all(k - 1) - all(k)) <= kTieRelTol * top;
  }
  return sol;
}

}  // namespace mca::procrustes
