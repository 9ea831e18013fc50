#pragma once

#include <cstdint>
#include <filesystem>
#include <utility>
#include <vector>

#include "mca/errors.hpp"
#include "mca/types.hpp"

namespace mca::datasets {

class IdxError : public Error {
 public:
  using Error::Error;
};

/// File magic is not the expected IDX image/label magic.
class IdxBadMagicError : public IdxError {
 public:
  using IdxError::IdxError;
};

/// File ends before the payload announced in its header.
class IdxTruncatedError : public IdxError {
 public:
  using IdxError::IdxError;
};

/// Image file and label file disagree on the item count.
class IdxCountMismatchError : public IdxError {
 public:
  using IdxError::IdxError;
};

/// Byte images with per-image labels, row-major pixel layout.
struct ImageSet {
  Index count = 0;
  int rows = 0;
  int cols = 0;
  std::vector<std::uint8_t> pixels;  // count * rows * cols
  std::vector<int> labels;           // count
};

/// Parse an IDX image/label file pair (magic 0x00000803 / 0x00000801,
/// big-endian dimensions). Byte-exact; counts are cross-checked.
ImageSet load_idx(const std::filesystem::path& images_path,
                  const std::filesystem::path& labels_path);

/// Exact inverse of load_idx.
void save_idx(const ImageSet& set, const std::filesystem::path& images_path,
              const std::filesystem::path& labels_path);

/// View image i as a rows x cols real matrix (values 0..255).
Mat image_matrix(const ImageSet& set, Index i);

/// Middle 14 x 14 portion (rows and columns 7..20) of a 28 x 28 image.
Mat crop14(const Mat& img);

/// 14 x 14 image of 2 x 2 block means of a 28 x 28 image.
Mat pixelate14(const Mat& img);

/// Apply crop14/pixelate14 across a set and flatten column-major into a
/// 196 x count matrix scaled to [0, 1].
Mat crop_set(const ImageSet& set);
Mat pixelate_set(const ImageSet& set);

/// Flatten raw images into a (rows*cols) x count matrix scaled to [0, 1].
Mat raw_set(const ImageSet& set);

struct MickeyConfig {
  Index n_points = 300;
  double noise_sigma = 0.1;
  std::uint64_t seed = 0;
};

/// Matched pair of point clouds for the alignment demo: n points drawn
/// uniformly from a mouse-head silhouette (three area-weighted disks in the
/// xy-plane of R^3), then per copy: independent spherical Gaussian noise,
/// an independent uniform random rotation, and whitening to zero mean and
/// identity covariance. Columns stay matched across the two outputs.
std::pair<Mat, Mat> mickey_pair(const MickeyConfig& cfg);

/// Split a 60000-image set into the first and second 30000 images, index
/// order preserved. The seed parameter is accepted for interface stability
/// but does not influence the split.
std::pair<ImageSet, ImageSet> split_mnist_halves(const ImageSet& set,
                                                 std::uint64_t seed = 0);

}  // namespace mca::datasets
