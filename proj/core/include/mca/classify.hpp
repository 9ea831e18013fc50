#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "mca/types.hpp"

namespace mca::classify {

/// Brute-force k-nearest-neighbor classifier. Distances are computed in
/// blocks through a Gram matrix for cache friendliness; no spatial index.
struct KnnModel {
  Mat points;               // d x m
  std::vector<int> labels;  // m
  int num_neighbors = 10;
};

/// Majority vote among the num_neighbors nearest points per query column.
/// Distance ties break toward the lower point index; vote ties toward the
/// smallest class label. Deterministic.
std::vector<int> knn_predict(const KnnModel& model, const Mat& queries);

struct EvalReport {
  double accuracy = 0.0;
  Mat confusion;                        // c x c, rows (true class) sum to 1 or 0
  std::vector<Index> per_class_counts;  // true-label counts per class
};

/// Exact count arithmetic; labels must lie in [0, num_classes).
EvalReport evaluate(const std::vector<int>& predicted,
                    const std::vector<int>& truth, int num_classes);

/// Row-normalized confusion matrix as CSV (one row per true class).
void write_confusion_csv(const EvalReport& report,
                         const std::filesystem::path& path);

/// JSON with accuracy, per-class counts and the confusion matrix.
std::string report_json(const EvalReport& report);

}  // namespace mca::classify
