#include "mca/alm.hpp"

#include <algorithm>
#include <fstream>
#include <string>

#include "mca/errors.hpp"
#include "mca/numlin.hpp"

namespace mca::alm {

Sample sample(const Instance& inst, Index n, std::uint64_t seed) {
  if (n < 1) throw Error("alm sample: n must be >= 1");
  if (inst.S1.cols() != inst.latent_dim || inst.S2.cols() != inst.latent_dim)
    throw Error("alm sample: S matrices do not match latent_dim");
  if (inst.mu1.size() != inst.S1.rows() || inst.mu2.size() != inst.S2.rows())
    throw Error("alm sample: mean lengths do not match S row counts");
  rng::Sampler sampler(seed);
  Sample out;
  out.omegas = sampler.gaussian_mat(inst.latent_dim, n);
  out.x1 = (inst.S1 * out.omegas).colwise() + inst.mu1;
  out.x2 = (inst.S2 * out.omegas).colwise() + inst.mu2;
  return out;
}

namespace {

// Orthonormal basis of ker S1 + ker S2, possibly with zero columns.
Mat kernel_sum_basis(const Mat& k1, const Mat& k2) {
  const Index total = k1.cols() + k2.cols();
  if (total == 0) return Mat(k1.rows(), 0);
  Mat stacked(k1.rows(), total);
  stacked << k1, k2;
  const Index rank = numlin::numerical_rank(stacked);
  if (rank == 0) return Mat(k1.rows(), 0);
  return numlin::truncated_svd(stacked, rank).W1;
}

}  // namespace

ExactMatchReport verify_exact_match(const Instance& inst, const AffineMap& g1,
                                    const AffineMap& g2, double tol,
                                    std::uint64_t probe_seed) {
  const Index d = inst.latent_dim;
  const Mat t1 = g1.A * inst.S1;
  const Mat t2 = g2.A * inst.S2;
  const double map_scale = std::max({1.0, t1.norm(), t2.norm()});

  ExactMatchReport report;

  // Condition (i): agreement of g1 and g2 on the whole latent space.
  const double matrix_residual = (t1 - t2).norm() / map_scale;
  const Vec offset1 = g1.A * inst.mu1 + g1.b;
  const Vec offset2 = g2.A * inst.mu2 + g2.b;
  const double offset_residual = (offset1 - offset2).norm();
  report.equal_maps_residual = std::max(matrix_residual, offset_residual);

  constexpr int kProbes = 100;
  rng::Sampler sampler(probe_seed);
  double worst = 0.0;
  for (int p = 0; p < kProbes; ++p) {
    const Vec omega = sampler.gaussian_vec(d);
    const Vec y1 = g1.A * (inst.S1 * omega + inst.mu1) + g1.b;
    const Vec y2 = g2.A * (inst.S2 * omega + inst.mu2) + g2.b;
    const double scale = std::max({1.0, y1.norm(), y2.norm()});
    worst = std::max(worst, (y1 - y2).norm() / scale);
  }
  report.cond_i_residual = worst;
  report.cond_i_holds =
      report.cond_i_residual <= tol && report.equal_maps_residual <= tol;

  // Condition (ii): ker(A_i S_i) = ker S1 + ker S2 for both sides.
  const Index r1 = numlin::numerical_rank(inst.S1);
  const Index r2 = numlin::numerical_rank(inst.S2);
  Mat stacked(inst.S1.rows() + inst.S2.rows(), d);
  stacked << inst.S1, inst.S2;
  const Index r_stacked = numlin::numerical_rank(stacked);
  // dim(K1 + K2) = dim K1 + dim K2 - dim(K1 n K2), and K1 n K2 = ker [S1; S2].
  const Index dim_sum = (d - r1) + (d - r2) - (d - r_stacked);
  report.audit.dim_ker_sum = dim_sum;

  const Mat basis = kernel_sum_basis(numlin::kernel_basis(inst.S1),
                                     numlin::kernel_basis(inst.S2));
  bool contained = true;
  if (basis.cols() > 0) {
    const double c1 = (t1 * basis).cwiseAbs().maxCoeff() / map_scale;
    const double c2 = (t2 * basis).cwiseAbs().maxCoeff() / map_scale;
    contained = c1 <= tol && c2 <= tol;
  }

  const Index rank_t1 = t1.size() > 0 ? numlin::numerical_rank(t1) : 0;
  const Index rank_t2 = t2.size() > 0 ? numlin::numerical_rank(t2) : 0;
  report.audit.dim_ker_a1s1 = d - rank_t1;
  report.audit.dim_ker_a2s2 = d - rank_t2;
  report.cond_ii_holds = contained && rank_t1 == d - dim_sum && rank_t2 == d - dim_sum;
  return report;
}

Instance random_instance(Index d1, Index d2, Index latent_dim,
                         rng::Sampler& sampler) {
  if (latent_dim < 1) throw Error("random_instance: latent_dim must be >= 1");
  Instance inst;
  inst.latent_dim = latent_dim;
  do {
    inst.S1 = sampler.gaussian_mat(d1, latent_dim);
  } while (numlin::numerical_rank(inst.S1) < std::min(d1, latent_dim));
  do {
    inst.S2 = sampler.gaussian_mat(d2, latent_dim);
  } while (numlin::numerical_rank(inst.S2) < std::min(d2, latent_dim));
  inst.mu1 = sampler.gaussian_vec(d1);
  inst.mu2 = sampler.gaussian_vec(d2);
  return inst;
}

std::vector<PhaseRow> phase_transition(Index d1, Index d2, Index latent_dim,
                                       const std::vector<Index>& n_values,
                                       int trials, std::uint64_t seed) {
  if (trials < 1) throw Error("phase_transition: trials must be >= 1");
  constexpr double kTol = 1e-6;
  std::vector<PhaseRow> rows;
  rows.reserve(n_values.size());
  for (std::size_t ni = 0; ni < n_values.size(); ++ni) {
    const Index n = n_values[ni];
    PhaseRow row;
    row.n = n;
    row.trials = trials;
    for (int t = 0; t < trials; ++t) {
      const std::uint64_t stream =
          (static_cast<std::uint64_t>(ni) << 32) | static_cast<std::uint64_t>(t);
      rng::Sampler sampler(seed, stream);
      const Instance inst = random_instance(d1, d2, latent_dim, sampler);
      std::uint64_t draw_state = seed ^ (stream * 0x9e3779b97f4a7c15ull + 1);
      const Sample s = sample(inst, n, rng::splitmix64(draw_state));
      const Model model = fit_exact_matching(s.x1, s.x2);
      const ExactMatchReport report =
          verify_exact_match(inst, model.map1, model.map2, kTol);
      if (report.cond_i_holds && report.cond_ii_holds) ++row.successes;
    }
    row.rate = static_cast<double>(row.successes) / static_cast<double>(trials);
    rows.push_back(row);
  }
  return rows;
}

void write_phase_csv(const std::vector<PhaseRow>& rows,
                     const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("write_phase_csv: cannot open " + path.string());
  out << "n,trials,successes,rate\n";
  for (const PhaseRow& row : rows) {
    out << row.n << "," << row.trials << "," << row.successes << ","
        << row.rate << "\n";
  }
}

}  // namespace mca::alm
