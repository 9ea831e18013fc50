#include "mca/classify.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <vector>

#include <json.hpp>

#include "mca/errors.hpp"

namespace mca::classify {

std::vector<int> knn_predict(const KnnModel& model, const Mat& queries) {
  const Index m = model.points.cols();
  const Index q = queries.cols();
  const int kNeighbors = model.num_neighbors;
  if (model.labels.size() != static_cast<std::size_t>(m))
    throw Error("knn_predict: label count does not match point count");
  if (m < kNeighbors)
    throw Error("knn_predict: need at least " + std::to_string(kNeighbors) +
                " points, got " + std::to_string(m));
  if (queries.rows() != model.points.rows())
    throw Error("knn_predict: query dimension " + std::to_string(queries.rows()) +
                " does not match model dimension " +
                std::to_string(model.points.rows()));

  const Vec point_sqnorm = model.points.colwise().squaredNorm();
  std::vector<int> predictions(static_cast<std::size_t>(q));

  constexpr Index kBlock = 256;
  for (Index start = 0; start < q; start += kBlock) {
    const Index width = std::min(kBlock, q - start);
    const Mat gram =
        model.points.transpose() * queries.middleCols(start, width);  // m x width

#pragma omp parallel for schedule(static)
    for (Index j = 0; j < width; ++j) {
      std::vector<std::pair<double, Index>> dist(static_cast<std::size_t>(m));
      for (Index i = 0; i < m; ++i)
        dist[static_cast<std::size_t>(i)] = {point_sqnorm(i) - 2.0 * gram(i, j), i};
      // (distance, index) ordering: ties break toward the lower index.
      std::nth_element(dist.begin(), dist.begin() + (kNeighbors - 1), dist.end());
      std::sort(dist.begin(), dist.begin() + kNeighbors);

      int best_label = 0;
      int best_count = 0;
      std::vector<std::pair<int, int>> votes;  // (label, count), few entries
      for (int v = 0; v < kNeighbors; ++v) {
        const int label =
            model.labels[static_cast<std::size_t>(dist[static_cast<std::size_t>(v)].second)];
        auto it = std::find_if(votes.begin(), votes.end(),
                               [label](const auto& e) { return e.first == label; });
        if (it == votes.end())
          votes.emplace_back(label, 1);
        else
          ++it->second;
      }
      std::sort(votes.begin(), votes.end());  // ascending label
      for (const auto& [label, count] : votes) {
        if (count > best_count) {  // strict: vote ties keep the smaller label
          best_count = count;
          best_label = label;
        }
      }
      predictions[static_cast<std::size_t>(start + j)] = best_label;
    }
  }
  return predictions;
}

EvalReport evaluate(const std::vector<int>& predicted,
                    const std::vector<int>& truth, int num_classes) {
  if (predicted.size() != truth.size())
    throw Error("evaluate: prediction and truth lengths differ");
  if (num_classes < 1) throw Error("evaluate: num_classes must be >= 1");

  Mat counts = Mat::Zero(num_classes, num_classes);
  Index correct = 0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const int t = truth[i];
    const int p = predicted[i];
    if (t < 0 || t >= num_classes)
      throw Error("evaluate: truth label " + std::to_string(t) + " out of range");
    if (p < 0 || p >= num_classes)
      throw Error("evaluate: predicted label " + std::to_string(p) + " out of range");
    counts(t, p) += 1.0;
    if (t == p) ++correct;
  }

  EvalReport report;
  report.per_class_counts.resize(static_cast<std::size_t>(num_classes));
  report.confusion = Mat::Zero(num_classes, num_classes);
  for (int c = 0; c < num_classes; ++c) {
    const double row_total = counts.row(c).sum();
    report.per_class_counts[static_cast<std::size_t>(c)] =
        static_cast<Index>(row_total);
    if (row_total > 0.0) report.confusion.row(c) = counts.row(c) / row_total;
  }
  report.accuracy = truth.empty()
                        ? 0.0
                        : static_cast<double>(correct) / static_cast<double>(truth.size());
  return report;
}

void write_confusion_csv(const EvalReport& report,
                         const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("write_confusion_csv: cannot open " + path.string());
  out.precision(17);
  for (Index i = 0; i < report.confusion.rows(); ++i) {
    for (Index j = 0; j < report.confusion.cols(); ++j) {
      if (j > 0) out << ",";
      out << report.confusion(i, j);
    }
    out << "\n";
  }
}

std::string report_json(const EvalReport& report) {
  nlohmann::ordered_json doc;
  doc["accuracy"] = report.accuracy;
  doc["per_class_counts"] = report.per_class_counts;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (Index i = 0; i < report.confusion.rows(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (Index j = 0; j < report.confusion.cols(); ++j)
      row.push_back(report.confusion(i, j));
    rows.push_back(std::move(row));
  }
  doc["confusion"] = std::move(rows);
  return doc.dump(2);
}

}  // namespace mca::classify
