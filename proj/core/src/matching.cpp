#include "mca/matching.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>

#include "mca/errors.hpp"
#include "mca/rng.hpp"

namespace mca::matching {

namespace {

void check_sets(const LabeledDataset& train, const LabeledDataset& examples,
                int r) {
  if (r < 1) throw Error("matching: r must be >= 1");
  if (train.labels.size() != static_cast<std::size_t>(train.data.cols()))
    throw Error("matching: train labels do not match train columns");
  if (examples.labels.size() != static_cast<std::size_t>(examples.data.cols()))
    throw Error("matching: example labels do not match example columns");
  if (train.data.rows() != examples.data.rows())
    throw Error("matching: train and example dimensions differ");
}

std::map<int, std::vector<Index>> indices_by_label(const LabeledDataset& set) {
  std::map<int, std::vector<Index>> by_label;
  for (Index i = 0; i < set.data.cols(); ++i)
    by_label[set.labels[static_cast<std::size_t>(i)]].push_back(i);
  return by_label;
}

const std::vector<Index>& candidates_for(
    const std::map<int, std::vector<Index>>& by_label, int label, int r) {
  const auto it = by_label.find(label);
  if (it == by_label.end())
    throw Error("matching: label " + std::to_string(label) +
                " absent from training set");
  if (it->second.size() < static_cast<std::size_t>(r))
    throw Error("matching: only " + std::to_string(it->second.size()) +
                " training points with label " + std::to_string(label) +
                ", need r = " + std::to_string(r));
  return it->second;
}

}  // namespace

MatchingSet match_nn(const LabeledDataset& train, const LabeledDataset& examples,
                     int r) {
  check_sets(train, examples, r);
  const auto by_label = indices_by_label(train);
  const Vec train_sqnorm = train.data.colwise().squaredNorm();

  MatchingSet ms;
  ms.r = r;
  ms.n_examples = examples.data.cols();
  ms.pairs.reserve(static_cast<std::size_t>(ms.n_examples) * r);

  for (Index e = 0; e < examples.data.cols(); ++e) {
    const auto& cand = candidates_for(by_label, examples.labels[static_cast<std::size_t>(e)], r);
    const Vec query = examples.data.col(e);
    const double query_sqnorm = query.squaredNorm();
    std::vector<std::pair<double, Index>> dist;
    dist.reserve(cand.size());
    for (const Index c : cand) {
      // ||t - q||^2 up to the common query term; ordering is unchanged.
      const double d = train_sqnorm(c) - 2.0 * train.data.col(c).dot(query) +
                       query_sqnorm;
      dist.emplace_back(d, c);
    }
    // Ties go to the lower training index.
    std::partial_sort(dist.begin(), dist.begin() + r, dist.end());
    for (int rank = 0; rank < r; ++rank)
      ms.pairs.push_back({dist[static_cast<std::size_t>(rank)].second, e, rank});
  }
  return ms;
}

MatchingSet match_random_label(const LabeledDataset& train,
                               const LabeledDataset& examples, int r,
                               std::uint64_t seed) {
  check_sets(train, examples, r);
  const auto by_label = indices_by_label(train);

  MatchingSet ms;
  ms.r = r;
  ms.n_examples = examples.data.cols();
  ms.pairs.reserve(static_cast<std::size_t>(ms.n_examples) * r);
  rng::Sampler sampler(seed);

  for (Index e = 0; e < examples.data.cols(); ++e) {
    const auto& cand = candidates_for(by_label, examples.labels[static_cast<std::size_t>(e)], r);
    const auto picks = rng::sample_without_replacement(
        static_cast<Index>(cand.size()), r, sampler);
    for (int rank = 0; rank < r; ++rank)
      ms.pairs.push_back({cand[static_cast<std::size_t>(picks[static_cast<std::size_t>(rank)])], e, rank});
  }
  return ms;
}

MatchingSet match_source(Index n_pairs) {
  MatchingSet ms;
  ms.r = 1;
  ms.n_examples = n_pairs;
  ms.pairs.reserve(static_cast<std::size_t>(n_pairs));
  for (Index j = 0; j < n_pairs; ++j) ms.pairs.push_back({j, j, 0});
  return ms;
}

std::pair<Mat, Mat> gather(const MatchingSet& ms, const Mat& train,
                           const Mat& examples) {
  Mat x1(train.rows(), static_cast<Index>(ms.pairs.size()));
  Mat x2(examples.rows(), static_cast<Index>(ms.pairs.size()));
  Index t = 0;
  for (const Pair& p : ms.pairs) {
    if (p.train_index < 0 || p.train_index >= train.cols())
      throw Error("gather: train index " + std::to_string(p.train_index) +
                  " out of range");
    if (p.example_index < 0 || p.example_index >= examples.cols())
      throw Error("gather: example index " + std::to_string(p.example_index) +
                  " out of range");
    x1.col(t) = train.col(p.train_index);
    x2.col(t) = examples.col(p.example_index);
    ++t;
  }
  return {std::move(x1), std::move(x2)};
}

void write_csv(const MatchingSet& ms, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("matching write_csv: cannot open " + path.string());
  out << "example_index,train_index,rank\n";
  for (const Pair& p : ms.pairs)
    out << p.example_index << "," << p.train_index << "," << p.rank << "\n";
}

MatchingSet read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("matching read_csv: cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line) || line != "example_index,train_index,rank")
    throw Error("matching read_csv: bad header in " + path.string());
  MatchingSet ms;
  Index max_example = -1;
  int max_rank = -1;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string field;
    Pair p;
    if (!std::getline(ss, field, ',')) throw Error("matching read_csv: short row");
    p.example_index = std::stoll(field);
    if (!std::getline(ss, field, ',')) throw Error("matching read_csv: short row");
    p.train_index = std::stoll(field);
    if (!std::getline(ss, field, ',')) throw Error("matching read_csv: short row");
    p.rank = std::stoi(field);
    max_example = std::max(max_example, p.example_index);
    max_rank = std::max(max_rank, p.rank);
    ms.pairs.push_back(p);
  }
  ms.n_examples = max_example + 1;
  ms.r = max_rank + 1;
  return ms;
}

}  // namespace mca::matching
