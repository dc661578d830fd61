#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "burstforge/burst.hpp"
#include "burstforge/comparator.hpp"
#include "burstforge/ranking.hpp"

namespace burstforge {

struct KendallReport {
  double m = 0.0;        // weighted disagreement, Eq-11 units
  double m_rev = 0.0;    // disagreement of the exactly reversed order
  double tau_bar = 0.0;  // m / m_rev, in [0, 1]
};

// Weighted Kendall distance between the ground-truth scores delta (higher =
// better) and a predicted order gamma (best first): discordant pairs are
// weighted by |(max(delta_i, delta_j) - delta_min) * (delta_i - delta_j)|,
// normalized by the mismatch of the reversed ground truth. Tied delta values
// raise TieError; the pair weight is ill-posed there.
KendallReport weighted_kendall(const std::vector<double>& delta,
                               const std::vector<std::size_t>& gamma);

struct BTResult {
  std::vector<double> scores;       // delta, positive, summing to 1
  std::size_t iterations = 0;
  double log_likelihood = 0.0;
  std::vector<double> ll_history;   // per-iteration, non-decreasing
};

// Bradley-Terry maximum likelihood via minorization-maximization:
//   pi_i <- W_i / sum_{j != i} n_ij / (pi_i + pi_j)
// renormalized each sweep, stopping when max |change| < tol. Requires a
// connected comparison graph and at least one win per item; violations raise
// DegenerateLikelihoodError naming an offending item.
BTResult bt_fit(const std::vector<std::vector<double>>& wins,
                std::size_t max_iter = 10000, double tol = 1e-10);

// Ground-truth scores from kernel-complexity labels: sharper frames (small
// zeta) get larger delta, and the epsilon keeps the worst score positive.
std::vector<double> delta_from_zeta(const std::vector<double>& zetas,
                                    double epsilon = 1e-6);

struct SortingExperimentRow {
  std::string burst_id;
  double tau_bar = 0.0;
};

struct SortingExperimentReport {
  std::vector<SortingExperimentRow> rows;
  double mean_tau_bar = 0.0;
  std::string comparator;
};

// Ranks every burst with the comparator (triangular strategy, soft scores)
// and measures the weighted Kendall disagreement against the zeta-derived
// ground truth.
SortingExperimentReport run_sorting_experiment(
    const std::vector<std::string>& manifest_paths,
    const Comparator& comparator, int tile = 200);

// Same scoring for bursts already in memory.
SortingExperimentReport run_sorting_experiment(
    const std::vector<std::vector<Frame>>& bursts,
    const Comparator& comparator);

enum class DeblurMode { kFba, kIfba, kIfbaFixedK };

struct DeblurExperimentResult {
  DeblurMode mode = DeblurMode::kFba;
  double psnr_db = 0.0;
  double ssim = 0.0;
  std::vector<std::size_t> selected;
  std::vector<double> trace;
  bool stopped = false;
  std::size_t stopped_at = 0;
};

// Runs the requested aggregation modes over a manifest burst with a sharp
// reference: batch FBA over all frames, IFBA with the degradation stop, or
// exactly k incremental steps with the stop disabled.
std::vector<DeblurExperimentResult> run_deblur_experiment(
    const std::string& manifest_path, const std::vector<DeblurMode>& modes,
    const Comparator& comparator, double p, double sigma_s, std::size_t k = 0);

}  // namespace burstforge
