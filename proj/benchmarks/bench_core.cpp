#include <benchmark/benchmark.h>

#include "mca/classify.hpp"
#include "mca/model.hpp"
#include "mca/procrustes.hpp"
#include "mca/rng.hpp"

namespace {

using mca::Index;
using mca::Mat;

Mat whitened(Index r, Index n, std::uint64_t seed) {
  mca::rng::Sampler sampler(seed);
  const Mat g = sampler.gaussian_mat(r, n);
  const auto svd = mca::numlin::thin_svd(g);
  return std::sqrt(static_cast<double>(n)) * svd.V.leftCols(r).transpose();
}

void BM_ProjectionProcrustes(benchmark::State& state) {
  const Index r = state.range(0);
  const Index n = 4 * r;
  const Mat z1 = whitened(r, n, 1);
  const Mat z2 = whitened(r, n, 2);
  for (auto _ : state) {
    auto sol = mca::procrustes::projection_procrustes(z1, z2, r / 2 + 1);
    benchmark::DoNotOptimize(sol.objective);
  }
}
BENCHMARK(BM_ProjectionProcrustes)->Arg(8)->Arg(32)->Arg(128);

void BM_Normalize(benchmark::State& state) {
  const Index d = state.range(0);
  mca::rng::Sampler sampler(3);
  const Mat data = sampler.gaussian_mat(d, 8 * d);
  for (auto _ : state) {
    auto [w, z] = mca::normalize(data);
    benchmark::DoNotOptimize(z(0, 0));
  }
}
BENCHMARK(BM_Normalize)->Arg(16)->Arg(64)->Arg(196);

void BM_Fit(benchmark::State& state) {
  const Index d = state.range(0);
  mca::rng::Sampler sampler(4);
  const Mat shared = sampler.gaussian_mat(d, 6 * d);
  const Mat x1 = shared + 0.05 * sampler.gaussian_mat(d, 6 * d);
  const Mat x2 = shared + 0.05 * sampler.gaussian_mat(d, 6 * d);
  for (auto _ : state) {
    auto model = mca::fit(x1, x2, d / 2);
    benchmark::DoNotOptimize(model.objective);
  }
}
BENCHMARK(BM_Fit)->Arg(16)->Arg(64);

void BM_KnnPredict(benchmark::State& state) {
  const Index m = state.range(0);
  mca::rng::Sampler sampler(5);
  mca::classify::KnnModel model;
  model.points = sampler.gaussian_mat(30, m);
  model.labels.resize(static_cast<std::size_t>(m));
  for (Index i = 0; i < m; ++i)
    model.labels[static_cast<std::size_t>(i)] =
        static_cast<int>(sampler.uniform_index(10));
  const Mat queries = sampler.gaussian_mat(30, 256);
  for (auto _ : state) {
    auto pred = mca::classify::knn_predict(model, queries);
    benchmark::DoNotOptimize(pred[0]);
  }
}
BENCHMARK(BM_KnnPredict)->Arg(1000)->Arg(10000)->Arg(60000);

}  // namespace

BENCHMARK_MAIN();
