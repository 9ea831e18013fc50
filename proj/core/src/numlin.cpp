#include "mca/numlin.hpp"

#include <Eigen/SVD>
#include <stdexcept>
#include <string>

#include "mca/errors.hpp"

namespace mca::numlin {

namespace {

void check_nonempty(const Mat& m, const char* op) {
  if (m.rows() < 1 || m.cols() < 1)
    throw Error(std::string(op) + ": empty matrix");
}

}  // namespace

Vec sample_mean(const Mat& data) {
  if (data.cols() < 1 || data.rows() < 1) throw Error("empty sample");
  return data.rowwise().mean();
}

Mat sample_covariance(const Mat& data, const Vec& mean) {
  if (data.cols() < 1 || data.rows() < 1) throw Error("empty sample");
  if (mean.size() != data.rows())
    throw Error("sample_covariance: mean length " + std::to_string(mean.size()) +
                " does not match dimension " + std::to_string(data.rows()));
  const Mat centered = data.colwise() - mean;
  Mat cov = (centered * centered.transpose()) / static_cast<double>(data.cols());
  cov = ((cov + cov.transpose()) / 2.0).eval();  // kill accumulation asymmetry
  return cov;
}

ThinSvd thin_svd(const Mat& m, double rank_tol) {
  check_nonempty(m, "thin_svd");
  Eigen::BDCSVD<Mat> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Vec& sv = svd.singularValues();
  const double top = sv.size() > 0 ? sv(0) : 0.0;
  if (!(top > 0.0)) throw RankZeroError("matrix has no positive singular value");
  Index r = 0;
  while (r < sv.size() && sv(r) > rank_tol * top) ++r;
  ThinSvd out;
  out.U = svd.matrixU().leftCols(r);
  out.sigma = sv.head(r);
  out.V = svd.matrixV().leftCols(r);
  return out;
}

TruncatedSvd truncated_svd(const Mat& m, Index k) {
  check_nonempty(m, "truncated_svd");
  const Index max_k = std::min(m.rows(), m.cols());
  if (k < 1 || k > max_k)
    throw Error("truncated_svd: k = " + std::to_string(k) +
                " outside [1, " + std::to_string(max_k) + "]");
  Eigen::BDCSVD<Mat> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  TruncatedSvd out;
  out.W1 = svd.matrixU().leftCols(k);
  out.sigma = svd.singularValues().head(k);
  out.W2 = svd.matrixV().leftCols(k);
  return out;
}

Vec singular_values(const Mat& m) {
  check_nonempty(m, "singular_values");
  Eigen::BDCSVD<Mat> svd(m);
  return svd.singularValues();
}

Index numerical_rank(const Mat& m, double rank_tol) {
  const Vec sv = singular_values(m);
  const double top = sv.size() > 0 ? sv(0) : 0.0;
  if (!(top > 0.0)) return 0;
  Index r = 0;
  while (r < sv.size() && sv(r) > rank_tol * top) ++r;
  return r;
}

Mat kernel_basis(const Mat& m, double rank_tol) {
  check_nonempty(m, "kernel_basis");
  Eigen::BDCSVD<Mat> svd(m, Eigen::ComputeFullV);
  const Vec& sv = svd.singularValues();
  const double top = sv.size() > 0 ? sv(0) : 0.0;
  Index r = 0;
  if (top > 0.0) {
    while (r < sv.size() && sv(r) > rank_tol * top) ++r;
  }
  return svd.matrixV().rightCols(m.cols() - r);
}

Vec pinv_apply(const ThinSvd& svd, const Vec& y) {
  if (y.size() != svd.U.rows())
    throw Error("pinv_apply: vector length " + std::to_string(y.size()) +
                " does not match " + std::to_string(svd.U.rows()));
  return svd.V * (svd.sigma.cwiseInverse().asDiagonal() * (svd.U.transpose() * y));
}

Mat pinv_apply(const ThinSvd& svd, const Mat& ys) {
  if (ys.rows() != svd.U.rows())
    throw Error("pinv_apply: row count " + std::to_string(ys.rows()) +
                " does not match " + std::to_string(svd.U.rows()));
  return svd.V * (svd.sigma.cwiseInverse().asDiagonal() * (svd.U.transpose() * ys));
}

}  // namespace mca::numlin
