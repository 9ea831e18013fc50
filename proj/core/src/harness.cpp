#include "mca/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "mca/classify.hpp"
#include "mca/datasets.hpp"
#include "mca/errors.hpp"
#include "mca/matching.hpp"
#include "mca/model.hpp"
#include "mca/procrustes.hpp"
#include "mca/rng.hpp"

namespace mca::harness {

using Json = nlohmann::ordered_json;

Kind parse_kind(const std::string& text) {
  if (text == "mnist-mnist") return Kind::MnistMnist;
  if (text == "crop-pixelate") return Kind::CropPixelate;
  if (text == "mickey") return Kind::Mickey;
  if (text == "phase-transition") return Kind::PhaseTransition;
  if (text == "convergence") return Kind::Convergence;
  throw Error("unknown experiment kind: " + text);
}

MatchStrategy parse_match(const std::string& text) {
  if (text == "nn") return MatchStrategy::Nn;
  if (text == "label") return MatchStrategy::Label;
  if (text == "source") return MatchStrategy::Source;
  throw Error("unknown match strategy: " + text);
}

std::string to_string(Kind kind) {
  switch (kind) {
    case Kind::MnistMnist: return "mnist-mnist";
    case Kind::CropPixelate: return "crop-pixelate";
    case Kind::Mickey: return "mickey";
    case Kind::PhaseTransition: return "phase-transition";
    case Kind::Convergence: return "convergence";
  }
  return "?";
}

std::string to_string(MatchStrategy match) {
  switch (match) {
    case MatchStrategy::Nn: return "nn";
    case MatchStrategy::Label: return "label";
    case MatchStrategy::Source: return "source";
  }
  return "?";
}

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

template <typename T>
std::vector<T> parse_list(const std::string& text) {
  std::vector<T> out;
  std::istringstream ss(text);
  std::string field;
  while (std::getline(ss, field, ',')) {
    field = trim(field);
    if (field.empty()) continue;
    out.push_back(static_cast<T>(std::stoull(field)));
  }
  return out;
}

}  // namespace

Config parse_config_text(const std::string& text) {
  Config config;
  bool seen_kind = false;
  std::istringstream stream(text);
  std::string line;
  int line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    const auto comment = line.find('#');
    if (comment != std::string::npos) line = line.substr(0, comment);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error("config line " + std::to_string(line_no) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));

    if (key == "kind") {
      config.kind = parse_kind(value);
      seen_kind = true;
    } else if (key == "match") {
      config.match = parse_match(value);
    } else if (key == "n") {
      config.n = std::stoll(value);
    } else if (key == "r") {
      config.r = std::stoi(value);
    } else if (key == "k") {
      if (value == "auto") {
        config.k_auto = true;
        config.k = 0;
      } else {
        config.k_auto = false;
        config.k = std::stoll(value);
        if (config.k < 1)
          throw Error("config: k must be >= 1 or auto");
      }
    } else if (key == "seeds") {
      config.seeds = parse_list<std::uint64_t>(value);
      if (config.seeds.empty()) throw Error("config: empty seed list");
    } else if (key == "mnist_dir") {
      config.mnist_dir = value;
    } else if (key == "out") {
      config.out_dir = value;
    } else if (key == "d1") {
      config.d1 = std::stoll(value);
    } else if (key == "d2") {
      config.d2 = std::stoll(value);
    } else if (key == "latent_dim") {
      config.latent_dim = std::stoll(value);
    } else if (key == "n_values") {
      config.n_values = parse_list<Index>(value);
    } else if (key == "trials") {
      config.trials = std::stoi(value);
    } else if (key == "n_ref") {
      config.n_ref = std::stoll(value);
    } else if (key == "n_points") {
      config.n_points = std::stoll(value);
    } else if (key == "noise_sigma") {
      config.noise_sigma = std::stod(value);
    } else {
      throw Error("config line " + std::to_string(line_no) + ": unknown key '" +
                  key + "'");
    }
  }
  if (!seen_kind) throw Error("config: missing required key 'kind'");
  if (config.n < 1 || config.r < 1) throw Error("config: n and r must be >= 1");
  return config;
}

Config parse_config_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open config file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str());
}

double median(std::vector<double> values) {
  if (values.empty()) throw Error("median of empty list");
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return (values[mid - 1] + values[mid]) / 2.0;
}

namespace {

template <typename Rows, typename Get>
double median_of(const Rows& rows, Get get) {
  std::vector<double> values;
  values.reserve(rows.size());
  for (const auto& row : rows) values.push_back(get(row));
  return median(std::move(values));
}

}  // namespace

double RunReport::median_bl1() const {
  return median_of(classification, [](const auto& r) { return r.bl1; });
}
double RunReport::median_bl2() const {
  return median_of(classification, [](const auto& r) { return r.bl2; });
}
double RunReport::median_mca() const {
  return median_of(classification, [](const auto& r) { return r.mca; });
}
double RunReport::median_ratio() const {
  return median_of(mickey, [](const auto& r) { return r.ratio; });
}

namespace {

void write_pgm(const Mat& img, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("write_pgm: cannot open " + path.string());
  out << "P5\n" << img.cols() << " " << img.rows() << "\n255\n";
  for (Index i = 0; i < img.rows(); ++i)
    for (Index j = 0; j < img.cols(); ++j) {
      const double v = std::clamp(img(i, j), 0.0, 1.0);
      out.put(static_cast<char>(static_cast<unsigned char>(std::lround(v * 255.0))));
    }
}

Mat column_as_image(const Mat& columns, Index col, Index rows, Index cols) {
  return Eigen::Map<const Mat>(columns.col(col).data(), rows, cols);
}

struct SeedArtifacts {
  classify::EvalReport bl1;
  classify::EvalReport bl2;
  classify::EvalReport mca;
  Model model;
};

/// Shared state for the two image-classification experiments. Data is
/// loaded once; BL2 does not depend on the seed and is cached.
class ClassificationExperiment {
 public:
  explicit ClassificationExperiment(const Config& config) : config_(config) {
    namespace ds = mca::datasets;
    const auto dir = config.mnist_dir;
    const ds::ImageSet train_base =
        ds::load_idx(dir / "train-images-idx3-ubyte", dir / "train-labels-idx1-ubyte");
    const ds::ImageSet test_base =
        ds::load_idx(dir / "t10k-images-idx3-ubyte", dir / "t10k-labels-idx1-ubyte");

    if (config.kind == Kind::CropPixelate) {
      train_ = ds::crop_set(train_base);
      train_labels_ = train_base.labels;
      pool_ = ds::pixelate_set(train_base);
      pool_labels_ = train_base.labels;
      test_ = ds::pixelate_set(test_base);
      test_labels_ = test_base.labels;
      test_base_ = test_base;
    } else if (config.kind == Kind::MnistMnist) {
      auto [first, second] = ds::split_mnist_halves(train_base);
      train_ = ds::raw_set(first);
      train_labels_ = first.labels;
      pool_ = ds::raw_set(second);
      pool_labels_ = second.labels;
      test_ = ds::raw_set(test_base);
      test_labels_ = test_base.labels;
    } else {
      throw Error("classification experiment requires an image kind");
    }

    int max_label = 0;
    for (const int l : train_labels_) max_label = std::max(max_label, l);
    for (const int l : test_labels_) max_label = std::max(max_label, l);
    num_classes_ = max_label + 1;
  }

  ClassificationSeedRow run_seed(std::uint64_t seed, Index n, bool with_bl2,
                                 SeedArtifacts* artifacts = nullptr) {
    if (n < 1 || n > pool_.cols())
      throw Error("example count n = " + std::to_string(n) + " out of range");

    // Example set: n points of the testing domain, drawn from the pool.
    rng::Sampler picker(seed, 0xE7A3);
    const std::vector<Index> chosen =
        rng::sample_without_replacement(pool_.cols(), n, picker);
    matching::LabeledDataset examples;
    examples.data.resize(pool_.rows(), n);
    examples.labels.resize(static_cast<std::size_t>(n));
    for (Index j = 0; j < n; ++j) {
      examples.data.col(j) = pool_.col(chosen[static_cast<std::size_t>(j)]);
      examples.labels[static_cast<std::size_t>(j)] =
          pool_labels_[static_cast<std::size_t>(chosen[static_cast<std::size_t>(j)])];
    }

    // Matching set.
    Mat x1m, x2m;
    if (config_.match == MatchStrategy::Source) {
      if (config_.kind != Kind::CropPixelate)
        throw Error("source matching requires index-aligned domains");
      if (config_.r != 1) throw Error("source matching has r = 1 by construction");
      Mat train_sel(train_.rows(), n);
      for (Index j = 0; j < n; ++j)
        train_sel.col(j) = train_.col(chosen[static_cast<std::size_t>(j)]);
      const matching::MatchingSet ms = matching::match_source(n);
      std::tie(x1m, x2m) = matching::gather(ms, train_sel, examples.data);
    } else {
      matching::LabeledDataset train_set{train_, train_labels_};
      matching::MatchingSet ms;
      if (config_.match == MatchStrategy::Nn) {
        ms = matching::match_nn(train_set, examples, config_.r);
      } else {
        std::uint64_t state = seed ^ 0xC0FFEE;
        ms = matching::match_random_label(train_set, examples, config_.r,
                                          rng::splitmix64(state));
      }
      std::tie(x1m, x2m) = matching::gather(ms, train_, examples.data);
    }

    // MCA: fit on the matching set, classify in the common domain.
    if (!config_.k_auto && config_.k < 1)
      throw Error("classification experiments need k in the config (or k = auto)");
    const Index k = config_.k_auto ? auto_k(x1m, x2m) : config_.k;
    if (k < 1) throw Error("auto k selected the degenerate common dimension 0");
    const Model model = fit(x1m, x2m, k);
    classify::KnnModel mca_knn{transform(model.map1, train_), train_labels_, 10};
    const std::vector<int> mca_pred =
        classify::knn_predict(mca_knn, transform(model.map2, test_));
    const classify::EvalReport mca_report =
        classify::evaluate(mca_pred, test_labels_, num_classes_);

    // BL1: k-NN on the example set alone.
    classify::KnnModel bl1_knn{examples.data, examples.labels, 10};
    const classify::EvalReport bl1_report = classify::evaluate(
        classify::knn_predict(bl1_knn, test_), test_labels_, num_classes_);

    ClassificationSeedRow row;
    row.seed = seed;
    row.bl1 = bl1_report.accuracy;
    row.bl2 = with_bl2 ? bl2_accuracy() : 0.0;
    row.mca = mca_report.accuracy;
    row.objective = model.objective;
    row.k_used = k;

    if (artifacts != nullptr) {
      artifacts->bl1 = bl1_report;
      artifacts->mca = mca_report;
      if (with_bl2) artifacts->bl2 = *bl2_report_;
      artifacts->model = model;
    }
    return row;
  }

  /// BL2 classifies the testing domain directly with the training-domain
  /// classifier, which only makes sense when the two dimensions agree.
  double bl2_accuracy() {
    if (!bl2_report_) {
      if (train_.rows() != test_.rows())
        throw Error("BL2 requires d1 = d2; got " + std::to_string(train_.rows()) +
                    " and " + std::to_string(test_.rows()));
      classify::KnnModel knn{train_, train_labels_, 10};
      bl2_report_ = classify::evaluate(classify::knn_predict(knn, test_),
                                       test_labels_, num_classes_);
    }
    return bl2_report_->accuracy;
  }

  int num_classes() const { return num_classes_; }
  const std::optional<datasets::ImageSet>& test_base() const { return test_base_; }

 private:
  Config config_;
  Mat train_;
  std::vector<int> train_labels_;
  Mat pool_;
  std::vector<int> pool_labels_;
  Mat test_;
  std::vector<int> test_labels_;
  int num_classes_ = 0;
  std::optional<datasets::ImageSet> test_base_;
  std::optional<classify::EvalReport> bl2_report_;
};

void write_reconstruction_images(const Model& model,
                                 const datasets::ImageSet& test_base,
                                 const std::filesystem::path& out_dir) {
  namespace ds = mca::datasets;
  const Index count = std::min<Index>(4, test_base.count);
  for (Index t = 0; t < count; ++t) {
    const Mat img = ds::image_matrix(test_base, t);
    const Mat crop = ds::crop14(img) / 255.0;
    const Mat pix = ds::pixelate14(img) / 255.0;
    const Mat crop_col = Eigen::Map<const Mat>(crop.data(), 196, 1);
    const Mat pix_col = Eigen::Map<const Mat>(pix.data(), 196, 1);

    const Mat z1 = transform(model.map1, crop_col);
    const Mat z2 = transform(model.map2, pix_col);

    const std::string suffix = std::to_string(t) + ".pgm";
    write_pgm(crop, out_dir / ("orig_crop_" + suffix));
    write_pgm(pix, out_dir / ("orig_pixelate_" + suffix));
    write_pgm(column_as_image(reconstruct(model, 1, z1), 0, 14, 14),
              out_dir / ("recon_crop_" + suffix));
    write_pgm(column_as_image(reconstruct(model, 2, z2), 0, 14, 14),
              out_dir / ("recon_pixelate_" + suffix));
    // Cross-domain: map with one side, reconstruct with the other.
    write_pgm(column_as_image(reconstruct(model, 2, z1), 0, 14, 14),
              out_dir / ("cross_crop_to_pixelate_" + suffix));
    write_pgm(column_as_image(reconstruct(model, 1, z2), 0, 14, 14),
              out_dir / ("cross_pixelate_to_crop_" + suffix));
  }
}

Json config_json(const Config& config) {
  Json doc;
  doc["kind"] = to_string(config.kind);
  doc["match"] = to_string(config.match);
  doc["n"] = config.n;
  doc["r"] = config.r;
  doc["k"] = config.k_auto ? Json("auto") : Json(config.k);
  doc["seeds"] = config.seeds;
  doc["mnist_dir"] = config.mnist_dir.generic_string();
  doc["out"] = config.out_dir.generic_string();
  doc["d1"] = config.d1;
  doc["d2"] = config.d2;
  doc["latent_dim"] = config.latent_dim;
  doc["n_values"] = config.n_values;
  doc["trials"] = config.trials;
  doc["n_ref"] = config.n_ref;
  doc["n_points"] = config.n_points;
  doc["noise_sigma"] = config.noise_sigma;
  return doc;
}

void write_report_json(const Config& config, const RunReport& report) {
  Json doc;
  doc["version"] = kVersion;
  doc["kind"] = to_string(report.kind);
  doc["config"] = config_json(config);

  Json results;
  if (!report.classification.empty()) {
    Json seeds = Json::array();
    for (const auto& row : report.classification) {
      Json entry;
      entry["seed"] = row.seed;
      entry["bl1"] = row.bl1;
      entry["bl2"] = row.bl2;
      entry["mca"] = row.mca;
      entry["objective"] = row.objective;
      entry["k"] = row.k_used;
      seeds.push_back(std::move(entry));
    }
    results["seeds"] = std::move(seeds);
    Json medians;
    medians["bl1"] = report.median_bl1();
    medians["bl2"] = report.median_bl2();
    medians["mca"] = report.median_mca();
    results["medians"] = std::move(medians);
  }
  if (!report.mickey.empty()) {
    Json seeds = Json::array();
    for (const auto& row : report.mickey) {
      Json entry;
      entry["seed"] = row.seed;
      entry["pre_rms"] = row.pre_rms;
      entry["post_rms"] = row.post_rms;
      entry["ratio"] = row.ratio;
      seeds.push_back(std::move(entry));
    }
    results["seeds"] = std::move(seeds);
    results["median_ratio"] = report.median_ratio();
  }
  if (!report.phase.empty()) {
    Json rows = Json::array();
    for (const auto& row : report.phase) {
      Json entry;
      entry["n"] = row.n;
      entry["trials"] = row.trials;
      entry["successes"] = row.successes;
      entry["rate"] = row.rate;
      rows.push_back(std::move(entry));
    }
    results["rows"] = std::move(rows);
  }
  if (!report.convergence.empty()) {
    Json rows = Json::array();
    for (const auto& row : report.convergence) {
      Json entry;
      entry["n"] = row.n;
      entry["trials"] = row.trials;
      entry["median_gap"] = row.median_gap;
      rows.push_back(std::move(entry));
    }
    results["rows"] = std::move(rows);
  }
  doc["results"] = std::move(results);

  std::ofstream out(config.out_dir / "report.json", std::ios::binary);
  if (!out) throw Error("cannot write report.json under " + config.out_dir.string());
  out << doc.dump(2) << "\n";
}

RunReport run_classification(const Config& config) {
  ClassificationExperiment experiment(config);
  RunReport report;
  report.kind = config.kind;
  bool first = true;
  for (const std::uint64_t seed : config.seeds) {
    SeedArtifacts artifacts;
    report.classification.push_back(
        experiment.run_seed(seed, config.n, true, first ? &artifacts : nullptr));
    if (first) {
      classify::write_confusion_csv(artifacts.bl1, config.out_dir / "confusion_bl1.csv");
      classify::write_confusion_csv(artifacts.bl2, config.out_dir / "confusion_bl2.csv");
      classify::write_confusion_csv(artifacts.mca, config.out_dir / "confusion_mca.csv");
      if (config.kind == Kind::CropPixelate && experiment.test_base())
        write_reconstruction_images(artifacts.model, *experiment.test_base(),
                                    config.out_dir);
      first = false;
    }
  }
  return report;
}

RunReport run_mickey(const Config& config) {
  RunReport report;
  report.kind = Kind::Mickey;
  const Index k = config.k >= 1 ? config.k : 2;
  bool first = true;
  for (const std::uint64_t seed : config.seeds) {
    datasets::MickeyConfig mc{config.n_points, config.noise_sigma, seed};
    const auto [z1, z2] = datasets::mickey_pair(mc);
    const auto sol = procrustes::projection_procrustes(z1, z2, k);
    MickeySeedRow row;
    row.seed = seed;
    row.pre_rms = std::sqrt((z1 - z2).squaredNorm() / static_cast<double>(z1.cols()));
    row.post_rms = std::sqrt(sol.objective);
    row.ratio = row.post_rms / row.pre_rms;
    report.mickey.push_back(row);

    if (first) {
      const Mat y1 = sol.B1 * z1;
      const Mat y2 = sol.B2 * z2;
      std::ofstream out(config.out_dir / "mickey_aligned.csv", std::ios::binary);
      if (!out) throw Error("cannot write mickey_aligned.csv");
      out.precision(17);
      out << "x1,y1,x2,y2\n";
      for (Index j = 0; j < y1.cols(); ++j)
        out << y1(0, j) << "," << y1(1, j) << "," << y2(0, j) << "," << y2(1, j)
            << "\n";
      first = false;
    }
  }
  return report;
}

}  // namespace

RunReport run(const Config& config) {
  const auto start = std::chrono::steady_clock::now();
  std::filesystem::create_directories(config.out_dir);

  RunReport report;
  switch (config.kind) {
    case Kind::CropPixelate:
    case Kind::MnistMnist:
      report = run_classification(config);
      break;
    case Kind::Mickey:
      report = run_mickey(config);
      break;
    case Kind::PhaseTransition: {
      report.kind = config.kind;
      std::vector<Index> ns = config.n_values;
      if (ns.empty())
        for (Index n = config.d1 + config.d2 - 2; n <= config.d1 + config.d2 + 3; ++n)
          ns.push_back(n);
      report.phase = alm::phase_transition(config.d1, config.d2, config.latent_dim,
                                           ns, config.trials,
                                           config.seeds.empty() ? 0 : config.seeds[0]);
      alm::write_phase_csv(report.phase, config.out_dir / "phase.csv");
      break;
    }
    case Kind::Convergence: {
      report.kind = config.kind;
      std::vector<Index> ns = config.n_values;
      if (ns.empty()) ns = {50, 100, 200, 500, 1000};
      report.convergence = convergence_diagnostic(
          config.d1, config.d2, config.latent_dim, ns, config.n_ref, config.trials,
          config.seeds.empty() ? 0 : config.seeds[0], config.k);
      write_convergence_csv(report.convergence, config.out_dir / "convergence.csv");
      break;
    }
  }

  write_report_json(config, report);
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

void accuracy_curve(const Config& config, const std::vector<Index>& n_values) {
  if (n_values.empty()) throw Error("accuracy_curve: empty n list");
  std::filesystem::create_directories(config.out_dir);
  ClassificationExperiment experiment(config);
  std::ofstream out(config.out_dir / "curve.csv", std::ios::binary);
  if (!out) throw Error("cannot write curve.csv");
  out.precision(17);
  out << "n,seed,bl1,mca\n";
  for (const Index n : n_values) {
    for (const std::uint64_t seed : config.seeds) {
      const ClassificationSeedRow row = experiment.run_seed(seed, n, false);
      out << n << "," << seed << "," << row.bl1 << "," << row.mca << "\n";
    }
  }
}

std::vector<ConvergenceRow> convergence_diagnostic(
    Index d1, Index d2, Index latent_dim, const std::vector<Index>& n_values,
    Index n_ref, int trials, std::uint64_t seed, Index k) {
  if (trials < 1) throw Error("convergence_diagnostic: trials must be >= 1");
  for (const Index n : n_values)
    if (n < 2 || n > n_ref)
      throw Error("convergence_diagnostic: n values must lie in [2, n_ref]");
  if (k <= 0) k = std::min(d1, d2);

  // Fixed ground-truth model; only the samples vary across trials.
  rng::Sampler model_sampler(seed, 0);
  const Mat s1 = model_sampler.gaussian_mat(d1, latent_dim);
  const Mat s2 = model_sampler.gaussian_mat(d2, latent_dim);
  const Vec mu1 = model_sampler.gaussian_vec(d1);
  const Vec mu2 = model_sampler.gaussian_vec(d2);

  std::vector<std::vector<double>> gaps(n_values.size());
  for (int t = 0; t < trials; ++t) {
    rng::Sampler sampler(seed, 1000 + static_cast<std::uint64_t>(t));
    // Latent draws truncated to |w_j| <= 3 keep the observations bounded.
    Mat omega(latent_dim, n_ref);
    for (Index j = 0; j < n_ref; ++j)
      for (Index i = 0; i < latent_dim; ++i) {
        double g = sampler.gaussian();
        while (std::abs(g) > 3.0) g = sampler.gaussian();
        omega(i, j) = g;
      }
    auto noise = [&sampler](Index rows, Index cols) {
      Mat e(rows, cols);
      for (Index j = 0; j < cols; ++j)
        for (Index i = 0; i < rows; ++i) e(i, j) = sampler.uniform01() - 0.5;
      return e;
    };
    const Mat x1 = ((s1 * omega).colwise() + mu1) + noise(d1, n_ref);
    const Mat x2 = ((s2 * omega).colwise() + mu2) + noise(d2, n_ref);

    const double obj_ref = fit(x1, x2, k).objective;
    for (std::size_t ni = 0; ni < n_values.size(); ++ni) {
      const Index n = n_values[ni];
      const double obj_n =
          fit(x1.leftCols(n), x2.leftCols(n), k).objective;
      gaps[ni].push_back(std::abs(obj_n - obj_ref));
    }
  }

  std::vector<ConvergenceRow> rows;
  rows.reserve(n_values.size());
  for (std::size_t ni = 0; ni < n_values.size(); ++ni)
    rows.push_back({n_values[ni], trials, median(gaps[ni])});
  return rows;
}

void write_convergence_csv(const std::vector<ConvergenceRow>& rows,
                           const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("write_convergence_csv: cannot open " + path.string());
  out.precision(17);
  out << "n,trials,median_gap\n";
  for (const auto& row : rows)
    out << row.n << "," << row.trials << "," << row.median_gap << "\n";
}

}  // namespace mca::harness
