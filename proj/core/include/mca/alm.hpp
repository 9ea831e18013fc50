#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "mca/model.hpp"
#include "mca/rng.hpp"
#include "mca/types.hpp"

namespace mca::alm {

/// Ground-truth affine linear model: domain i observes S_i w + mu_i for a
/// shared latent w in R^latent_dim.
struct Instance {
  Mat S1;   // d1 x latent_dim
  Vec mu1;  // d1
  Mat S2;   // d2 x latent_dim
  Vec mu2;  // d2
  Index latent_dim = 0;
};

struct Sample {
  Mat x1;      // d1 x n
  Mat x2;      // d2 x n
  Mat omegas;  // latent_dim x n, the latent draws behind each column
};

/// Draw n latent points i.i.d. standard Gaussian and push them through both
/// observation maps. Deterministic given the seed.
Sample sample(const Instance& inst, Index n, std::uint64_t seed);

struct KernelAudit {
  Index dim_ker_a1s1 = 0;  // latent_dim - rank(A1 S1)
  Index dim_ker_a2s2 = 0;  // latent_dim - rank(A2 S2)
  Index dim_ker_sum = 0;   // dim(ker S1 + ker S2)
};

/// Outcome of checking a decoded map pair against the ground truth.
///
/// Condition (i): g1 and g2 agree on the whole latent space. Checked on
/// fresh Gaussian probes and, equivalently, as the algebraic identities
/// A1 S1 = A2 S2 and A1 mu1 + b1 = A2 mu2 + b2.
///
/// Condition (ii): ker(A_i S_i) = ker S1 + ker S2 for both i. Checked by
/// mapping a kernel-sum basis through A_i S_i (containment) plus the rank
/// identity rank(A_i S_i) = latent_dim - dim(ker S1 + ker S2).
struct ExactMatchReport {
  bool cond_i_holds = false;
  double cond_i_residual = 0.0;     // max relative probe residual
  double equal_maps_residual = 0.0; // max of the two algebraic residuals
  bool cond_ii_holds = false;
  KernelAudit audit;
};

ExactMatchReport verify_exact_match(const Instance& inst, const AffineMap& g1,
                                    const AffineMap& g2, double tol,
                                    std::uint64_t probe_seed = 0x9e3779b97f4a7c15ull);

/// Instance with dense Gaussian S_i (redrawn in the measure-zero event of
/// numerical rank deficiency) and Gaussian means.
Instance random_instance(Index d1, Index d2, Index latent_dim,
                         rng::Sampler& sampler);

struct PhaseRow {
  Index n = 0;
  int trials = 0;
  int successes = 0;
  double rate = 0.0;
};

/// For each n: fraction of fresh random instances for which the
/// exact-matching decoder (fit_exact_matching) passes verify_exact_match at
/// tol 1e-6. Trials use independent RNG streams derived from (seed, n, trial).
std::vector<PhaseRow> phase_transition(Index d1, Index d2, Index latent_dim,
                                       const std::vector<Index>& n_values,
                                       int trials, std::uint64_t seed);

/// CSV with columns: n, trials, successes, rate.
void write_phase_csv(const std::vector<PhaseRow>& rows,
                     const std::filesystem::path& path);

}  // namespace mca::alm
