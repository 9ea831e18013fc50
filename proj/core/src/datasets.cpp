#include "mca/datasets.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "mca/model.hpp"
#include "mca/rng.hpp"

namespace mca::datasets {

namespace {

constexpr std::uint32_t kImagesMagic = 0x00000803;
constexpr std::uint32_t kLabelsMagic = 0x00000801;

std::uint32_t read_be32(std::ifstream& in, const std::string& file,
                        const char* what) {
  std::array<unsigned char, 4> buf{};
  if (!in.read(reinterpret_cast<char*>(buf.data()), 4))
    throw IdxTruncatedError("idx file " + file + " truncated while reading " + what);
  return (static_cast<std::uint32_t>(buf[0]) << 24) |
         (static_cast<std::uint32_t>(buf[1]) << 16) |
         (static_cast<std::uint32_t>(buf[2]) << 8) |
         static_cast<std::uint32_t>(buf[3]);
}

void write_be32(std::ofstream& out, std::uint32_t value) {
  const std::array<unsigned char, 4> buf{
      static_cast<unsigned char>((value >> 24) & 0xff),
      static_cast<unsigned char>((value >> 16) & 0xff),
      static_cast<unsigned char>((value >> 8) & 0xff),
      static_cast<unsigned char>(value & 0xff)};
  out.write(reinterpret_cast<const char*>(buf.data()), 4);
}

}  // namespace

ImageSet load_idx(const std::filesystem::path& images_path,
                  const std::filesystem::path& labels_path) {
  std::ifstream images(images_path, std::ios::binary);
  if (!images) throw IdxError("cannot open " + images_path.string());
  std::ifstream labels(labels_path, std::ios::binary);
  if (!labels) throw IdxError("cannot open " + labels_path.string());

  const std::uint32_t image_magic = read_be32(images, images_path.string(), "magic");
  if (image_magic != kImagesMagic)
    throw IdxBadMagicError("bad image magic in " + images_path.string());
  const std::uint32_t image_count = read_be32(images, images_path.string(), "count");
  const std::uint32_t rows = read_be32(images, images_path.string(), "rows");
  const std::uint32_t cols = read_be32(images, images_path.string(), "cols");

  const std::uint32_t label_magic = read_be32(labels, labels_path.string(), "magic");
  if (label_magic != kLabelsMagic)
    throw IdxBadMagicError("bad label magic in " + labels_path.string());
  const std::uint32_t label_count = read_be32(labels, labels_path.string(), "count");

  if (image_count != label_count)
    throw IdxCountMismatchError("image count " + std::to_string(image_count) +
                                " does not match label count " +
                                std::to_string(label_count));

  ImageSet set;
  set.count = static_cast<Index>(image_count);
  set.rows = static_cast<int>(rows);
  set.cols = static_cast<int>(cols);

  const std::size_t pixel_bytes =
      static_cast<std::size_t>(image_count) * rows * cols;
  set.pixels.resize(pixel_bytes);
  if (!images.read(reinterpret_cast<char*>(set.pixels.data()),
                   static_cast<std::streamsize>(pixel_bytes)))
    throw IdxTruncatedError("idx file " + images_path.string() +
                            " truncated in pixel data");

  std::vector<std::uint8_t> raw_labels(image_count);
  if (!labels.read(reinterpret_cast<char*>(raw_labels.data()),
                   static_cast<std::streamsize>(image_count)))
    throw IdxTruncatedError("idx file " + labels_path.string() +
                            " truncated in label data");
  set.labels.assign(raw_labels.begin(), raw_labels.end());
  return set;
}

void save_idx(const ImageSet& set, const std::filesystem::path& images_path,
              const std::filesystem::path& labels_path) {
  std::ofstream images(images_path, std::ios::binary);
  if (!images) throw IdxError("cannot open " + images_path.string());
  write_be32(images, kImagesMagic);
  write_be32(images, static_cast<std::uint32_t>(set.count));
  write_be32(images, static_cast<std::uint32_t>(set.rows));
  write_be32(images, static_cast<std::uint32_t>(set.cols));
  images.write(reinterpret_cast<const char*>(set.pixels.data()),
               static_cast<std::streamsize>(set.pixels.size()));

  std::ofstream labels(labels_path, std::ios::binary);
  if (!labels) throw IdxError("cannot open " + labels_path.string());
  write_be32(labels, kLabelsMagic);
  write_be32(labels, static_cast<std::uint32_t>(set.count));
  for (const int label : set.labels)
    labels.put(static_cast<char>(static_cast<unsigned char>(label)));
}

Mat image_matrix(const ImageSet& set, Index i) {
  if (i < 0 || i >= set.count) throw Error("image_matrix: index out of range");
  Mat img(set.rows, set.cols);
  const std::size_t offset = static_cast<std::size_t>(i) *
                             static_cast<std::size_t>(set.rows) *
                             static_cast<std::size_t>(set.cols);
  for (int r = 0; r < set.rows; ++r)
    for (int c = 0; c < set.cols; ++c)
      img(r, c) = static_cast<double>(
          set.pixels[offset + static_cast<std::size_t>(r) *
                                  static_cast<std::size_t>(set.cols) +
                     static_cast<std::size_t>(c)]);
  return img;
}

Mat crop14(const Mat& img) {
  if (img.rows() != 28 || img.cols() != 28)
    throw Error("crop14: expected a 28 x 28 image");
  return img.block(7, 7, 14, 14);
}

Mat pixelate14(const Mat& img) {
  if (img.rows() != 28 || img.cols() != 28)
    throw Error("pixelate14: expected a 28 x 28 image");
  Mat out(14, 14);
  for (Index i = 0; i < 14; ++i)
    for (Index j = 0; j < 14; ++j)
      out(i, j) = img.block(2 * i, 2 * j, 2, 2).mean();
  return out;
}

namespace {

template <typename Transform>
Mat flatten_transformed(const ImageSet& set, Transform&& transform, Index out_dim) {
  Mat out(out_dim, set.count);
  for (Index i = 0; i < set.count; ++i) {
    const Mat img = transform(image_matrix(set, i));
    out.col(i) =
        Eigen::Map<const Vec>(img.data(), img.size()) / 255.0;  // column-major
  }
  return out;
}

}  // namespace

Mat crop_set(const ImageSet& set) {
  return flatten_transformed(set, [](const Mat& img) { return crop14(img); }, 196);
}

Mat pixelate_set(const ImageSet& set) {
  return flatten_transformed(set, [](const Mat& img) { return pixelate14(img); },
                             196);
}

Mat raw_set(const ImageSet& set) {
  return flatten_transformed(set, [](const Mat& img) { return img; },
                             static_cast<Index>(set.rows) * set.cols);
}

std::pair<Mat, Mat> mickey_pair(const MickeyConfig& cfg) {
  if (cfg.n_points < 3) throw Error("mickey_pair: need at least 3 points");
  if (cfg.noise_sigma < 0.0) throw Error("mickey_pair: sigma must be >= 0");

  // Head disk of radius 1 at the origin, ear disks of radius 0.45 centered
  // at (+-0.75, 0.90); disks weighted by area.
  struct Disk {
    double cx, cy, radius;
  };
  const std::array<Disk, 3> disks{{{0.0, 0.0, 1.0},
                                   {-0.75, 0.90, 0.45},
                                   {0.75, 0.90, 0.45}}};
  std::array<double, 3> cumulative{};
  double total = 0.0;
  for (std::size_t i = 0; i < disks.size(); ++i) {
    total += disks[i].radius * disks[i].radius;
    cumulative[i] = total;
  }

  rng::Sampler sampler(cfg.seed);
  Mat base(3, cfg.n_points);
  for (Index j = 0; j < cfg.n_points; ++j) {
    const double pick = sampler.uniform01() * total;
    std::size_t d = 0;
    while (d + 1 < disks.size() && pick > cumulative[d]) ++d;
    const double radius = disks[d].radius * std::sqrt(sampler.uniform01());
    const double angle = 2.0 * 3.14159265358979323846 * sampler.uniform01();
    base(0, j) = disks[d].cx + radius * std::cos(angle);
    base(1, j) = disks[d].cy + radius * std::sin(angle);
    base(2, j) = 0.0;
  }

  auto deform = [&](std::uint64_t stream) {
    rng::Sampler local(cfg.seed, stream);
    Mat noisy = base + cfg.noise_sigma * local.gaussian_mat(3, cfg.n_points);
    const Mat rotation = rng::random_rotation3(local);
    auto [whitening, z] = normalize(rotation * noisy);
    (void)whitening;
    return z;
  };

  Mat z1 = deform(1);
  Mat z2 = deform(2);
  return {std::move(z1), std::move(z2)};
}

std::pair<ImageSet, ImageSet> split_mnist_halves(const ImageSet& set,
                                                 std::uint64_t /*seed*/) {
  if (set.count != 60000)
    throw Error("split_mnist_halves: expected 60000 images, got " +
                std::to_string(set.count));
  const Index half = set.count / 2;
  const std::size_t image_bytes =
      static_cast<std::size_t>(set.rows) * static_cast<std::size_t>(set.cols);

  auto slice = [&](Index begin, Index count) {
    ImageSet out;
    out.count = count;
    out.rows = set.rows;
    out.cols = set.cols;
    out.pixels.assign(
        set.pixels.begin() + static_cast<std::ptrdiff_t>(begin * image_bytes),
        set.pixels.begin() +
            static_cast<std::ptrdiff_t>((begin + count) * image_bytes));
    out.labels.assign(set.labels.begin() + begin, set.labels.begin() + begin + count);
    return out;
  };

  return {slice(0, half), slice(half, half)};
}

}  // namespace mca::datasets
