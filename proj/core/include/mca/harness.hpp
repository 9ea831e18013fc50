#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "mca/alm.hpp"
#include "mca/types.hpp"

namespace mca::harness {

enum class Kind { MnistMnist, CropPixelate, Mickey, PhaseTransition, Convergence };
enum class MatchStrategy { Nn, Label, Source };

Kind parse_kind(const std::string& text);
MatchStrategy parse_match(const std::string& text);
std::string to_string(Kind kind);
std::string to_string(MatchStrategy match);

/// Experiment description, read from a flat key = value config file.
/// Unknown keys are rejected.
struct Config {
  Kind kind = Kind::CropPixelate;
  MatchStrategy match = MatchStrategy::Source;
  Index n = 20;                 // example-set size
  int r = 1;                    // matches per example point
  Index k = 0;                  // common dimension; 0 = not set (kind default)
  bool k_auto = false;          // k = auto in the config file
  std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5};
  std::filesystem::path mnist_dir = "data/mnist";
  std::filesystem::path out_dir = "out";

  // phase-transition / convergence kinds
  Index d1 = 4;
  Index d2 = 5;
  Index latent_dim = 9;
  std::vector<Index> n_values;
  int trials = 100;
  Index n_ref = 20000;

  // mickey kind
  Index n_points = 300;
  double noise_sigma = 0.1;
};

Config parse_config_text(const std::string& text);
Config parse_config_file(const std::filesystem::path& path);

struct ClassificationSeedRow {
  std::uint64_t seed = 0;
  double bl1 = 0.0;
  double bl2 = 0.0;
  double mca = 0.0;
  double objective = 0.0;
  Index k_used = 0;
};

struct MickeySeedRow {
  std::uint64_t seed = 0;
  double pre_rms = 0.0;
  double post_rms = 0.0;
  double ratio = 0.0;
};

struct ConvergenceRow {
  Index n = 0;
  int trials = 0;
  double median_gap = 0.0;
};

struct RunReport {
  Kind kind = Kind::CropPixelate;
  std::vector<ClassificationSeedRow> classification;
  std::vector<MickeySeedRow> mickey;
  std::vector<alm::PhaseRow> phase;
  std::vector<ConvergenceRow> convergence;
  double wall_seconds = 0.0;  // reported to the console, never serialized

  double median_bl1() const;
  double median_bl2() const;
  double median_mca() const;
  double median_ratio() const;
};

/// Execute the configured experiment and write its artifacts (report.json,
/// confusion_<method>.csv, phase.csv, convergence.csv, demo images) under
/// config.out_dir. The JSON report is byte-deterministic for a fixed
/// config: timing is deliberately kept out of it.
RunReport run(const Config& config);

/// Re-run the classification experiment for each n in n_values and append
/// one row (n, seed, bl1, mca) per seed to curve.csv under out_dir.
void accuracy_curve(const Config& config, const std::vector<Index>& n_values);

/// Empirical-objective stability diagnostic. A fixed bounded latent model
/// (coordinate-truncated Gaussian latent, |w_j| <= 3, plus independent
/// uniform observation noise) is sampled once per trial with n_ref points;
/// the fitted objective on the first n columns is compared against the
/// objective on all n_ref. Returns the median |gap| per n. k = 0 selects
/// min(d1, d2).
std::vector<ConvergenceRow> convergence_diagnostic(
    Index d1, Index d2, Index latent_dim, const std::vector<Index>& n_values,
    Index n_ref, int trials, std::uint64_t seed, Index k = 0);

void write_convergence_csv(const std::vector<ConvergenceRow>& rows,
                           const std::filesystem::path& path);

double median(std::vector<double> values);

}  // namespace mca::harness
