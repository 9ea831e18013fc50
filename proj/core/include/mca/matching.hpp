#pragma once

#include <cstdint>
#include <filesystem>
#include <utility>
#include <vector>

#include "mca/types.hpp"

namespace mca::matching {

struct LabeledDataset {
  Mat data;                 // d x m, one point per column
  std::vector<int> labels;  // m class labels
};

/// One matched pair: a training-domain point and the example point it is
/// matched to, plus the rank of the pair among that example's r matches.
struct Pair {
  Index train_index = 0;
  Index example_index = 0;
  int rank = 0;
};

/// n * r pairs linking r training points to each of n example points.
struct MatchingSet {
  std::vector<Pair> pairs;  // sorted by (example_index, rank)
  int r = 1;
  Index n_examples = 0;
};

/// Match each example point to its r nearest same-label training points in
/// Euclidean distance. Distance ties break toward the lower training index.
MatchingSet match_nn(const LabeledDataset& train, const LabeledDataset& examples,
                     int r);

/// Match each example point to r same-label training points drawn uniformly
/// without replacement. Deterministic given the seed.
MatchingSet match_random_label(const LabeledDataset& train,
                               const LabeledDataset& examples, int r,
                               std::uint64_t seed);

/// Identity pairing j <-> j for datasets that are aligned by construction.
MatchingSet match_source(Index n_pairs);

/// Materialize the matched columns: column t of x1/x2 are the paired points,
/// so both outputs have n * r columns.
std::pair<Mat, Mat> gather(const MatchingSet& ms, const Mat& train,
                           const Mat& examples);

/// CSV with columns: example_index, train_index, rank.
void write_csv(const MatchingSet& ms, const std::filesystem::path& path);
MatchingSet read_csv(const std::filesystem::path& path);

}  // namespace mca::matching
