#include "burstforge/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <numeric>

#include "burstforge/error.hpp"
#include "burstforge/fba.hpp"
#include "burstforge/image_io.hpp"
#include "burstforge/metrics.hpp"
#include "burstforge/parallel.hpp"

namespace fs = std::filesystem;

namespace burstforge {

namespace {

// Disagreement of a predicted position table against delta, Eq-11 weighting.
double kendall_mismatch(const std::vector<double>& delta,
                        const std::vector<std::size_t>& position,
                        double delta_min) {
  const std::size_t n = delta.size();
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool truth_ahead = delta[i] > delta[j];
      const bool predicted_ahead = position[i] < position[j];
      if (truth_ahead != predicted_ahead) {
        total += std::abs((std::max(delta[i], delta[j]) - delta_min) *
                          (delta[i] - delta[j]));
      }
    }
  }
  return total;
}

std::vector<std::size_t> positions_of(const std::vector<std::size_t>& order) {
  std::vector<std::size_t> position(order.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank)
    position[order[rank]] = rank;
  return position;
}

double bt_log_likelihood(const std::vector<std::vector<double>>& wins,
                         const std::vector<double>& pi) {
  const std::size_t n = pi.size();
  double ll = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && wins[i][j] > 0.0)
        ll += wins[i][j] * std::log(pi[i] / (pi[i] + pi[j]));
  return ll;
}

}  // namespace

KendallReport weighted_kendall(const std::vector<double>& delta,
                               const std::vector<std::size_t>& gamma) {
  const std::size_t n = delta.size();
  if (n < 2) throw ParameterError("weighted_kendall: need at least 2 items");
  if (gamma.size() != n)
    throw DimensionError("weighted_kendall: rank/score length mismatch");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (delta[i] == delta[j])
        throw TieError("weighted_kendall: tied scores at items " +
                       std::to_string(i) + " and " + std::to_string(j));

  const double delta_min = *std::min_element(delta.begin(), delta.end());
  const std::vector<std::size_t> predicted = positions_of(gamma);

  // Reversed ground truth: every pair discordant.
  std::vector<std::size_t> by_delta(n);
  std::iota(by_delta.begin(), by_delta.end(), std::size_t{0});
  std::sort(by_delta.begin(), by_delta.end(),
            [&](std::size_t a, std::size_t b) { return delta[a] < delta[b]; });
  const std::vector<std::size_t> reversed = positions_of(by_delta);

  KendallReport report;
  report.m = kendall_mismatch(delta, predicted, delta_min);
  report.m_rev = kendall_mismatch(delta, reversed, delta_min);
  report.tau_bar = report.m / report.m_rev;
  return report;
}

BTResult bt_fit(const std::vector<std::vector<double>>& wins,
                std::size_t max_iter, double tol) {
  const std::size_t n = wins.size();
  if (n < 2) throw ParameterError("bt_fit: need at least 2 items");
  for (const auto& row : wins)
    if (row.size() != n) throw DimensionError("bt_fit: wins must be n x n");

  // Total wins per item and symmetric pair counts.
  std::vector<double> total_wins(n, 0.0);
  std::vector<std::vector<double>> games(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      total_wins[i] += wins[i][j];
      games[i][j] = wins[i][j] + wins[j][i];
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (total_wins[i] <= 0.0)
      throw DegenerateLikelihoodError("bt_fit: item " + std::to_string(i) +
                                      " has zero wins");

  // The comparison graph must be connected for a finite maximizer.
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> stack = {0};
  seen[0] = 1;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t v = 0; v < n; ++v) {
      if (!seen[v] && games[u][v] > 0.0) {
        seen[v] = 1;
        stack.push_back(v);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!seen[i])
      throw DegenerateLikelihoodError(
          "bt_fit: comparison graph disconnected at item " +
          std::to_string(i));

  BTResult result;
  std::vector<double> pi(n, 1.0 / static_cast<double>(n));
  double ll = bt_log_likelihood(wins, pi);
  result.ll_history.push_back(ll);
  for (std::size_t iter = 0; iter < max_iter; ++iter) {
    std::vector<double> next(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      double denom = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i && games[i][j] > 0.0)
          denom += games[i][j] / (pi[i] + pi[j]);
      next[i] = total_wins[i] / denom;
    }
    const double total = std::accumulate(next.begin(), next.end(), 0.0);
    for (double& v : next) v /= total;

    double max_change = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      max_change = std::max(max_change, std::abs(next[i] - pi[i]));
    pi = std::move(next);
    ++result.iterations;

    const double next_ll = bt_log_likelihood(wins, pi);
    if (next_ll + 1e-9 * (1.0 + std::abs(ll)) < ll)
      throw Error("bt_fit: log-likelihood decreased; MM update is broken");
    ll = next_ll;
    result.ll_history.push_back(ll);
    if (max_change < tol) break;
  }
  result.scores = std::move(pi);
  result.log_likelihood = ll;
  return result;
}

std::vector<double> delta_from_zeta(const std::vector<double>& zetas,
                                    double epsilon) {
  if (zetas.empty()) throw ParameterError("delta_from_zeta: empty input");
  const double top = *std::max_element(zetas.begin(), zetas.end());
  std::vector<double> delta(zetas.size());
  for (std::size_t i = 0; i < zetas.size(); ++i)
    delta[i] = top - zetas[i] + epsilon;
  return delta;
}

SortingExperimentReport run_sorting_experiment(
    const std::vector<std::vector<Frame>>& bursts,
    const Comparator& comparator) {
  if (bursts.empty())
    throw ParameterError("run_sorting_experiment: no bursts");

  SortingExperimentReport report;
  report.comparator = comparator.name();
  report.rows.resize(bursts.size());
  parallel_for(bursts.size(), [&](std::size_t b) {
    const std::vector<Frame>& frames = bursts[b];
    std::vector<double> zetas;
    for (const auto& frame : frames) {
      if (!frame.zeta)
        throw MissingLabelError(
            "run_sorting_experiment: frame without zeta in burst " +
            std::to_string(b));
      zetas.push_back(*frame.zeta);
    }
    const PairProb pp =
        pair_probabilities(frames, comparator, PairStrategy::kTriangular);
    const RankResult ranks = rank_scores(pp, RankMode::kSoft);
    const KendallReport kendall =
        weighted_kendall(delta_from_zeta(zetas), ranks.gamma);
    report.rows[b] = {std::to_string(b), kendall.tau_bar};
  });

  double total = 0.0;
  for (const auto& row : report.rows) total += row.tau_bar;
  report.mean_tau_bar = total / static_cast<double>(report.rows.size());
  return report;
}

SortingExperimentReport run_sorting_experiment(
    const std::vector<std::string>& manifest_paths,
    const Comparator& comparator, int tile) {
  std::vector<std::vector<Frame>> bursts;
  for (const auto& path : manifest_paths) {
    LoadedBurst burst = load_burst(path);
    std::vector<Frame> frames;
    for (auto& frame : burst.frames) {
      frame.image = center_tile(frame.image, tile);
      frames.push_back(std::move(frame));
    }
    bursts.push_back(std::move(frames));
  }
  SortingExperimentReport report = run_sorting_experiment(bursts, comparator);
  for (std::size_t b = 0; b < manifest_paths.size(); ++b)
    report.rows[b].burst_id = manifest_paths[b];
  return report;
}

std::vector<DeblurExperimentResult> run_deblur_experiment(
    const std::string& manifest_path, const std::vector<DeblurMode>& modes,
    const Comparator& comparator, double p, double sigma_s, std::size_t k) {
  const LoadedBurst burst = load_burst(manifest_path);
  if (burst.manifest.sharp_ref.empty())
    throw ParameterError("run_deblur_experiment: manifest has no sharp_ref");
  const ImageF sharp = load_image(
      (fs::path(burst.dir) / burst.manifest.sharp_ref).string());

  // Sort once; every incremental mode consumes the same order.
  const PairProb pp =
      pair_probabilities(burst.frames, comparator, PairStrategy::kTriangular);
  const RankResult ranks = rank_scores(pp, RankMode::kSoft);
  const std::vector<Frame> sorted = sort_burst(burst.frames, ranks);

  std::vector<DeblurExperimentResult> results;
  for (const DeblurMode mode : modes) {
    DeblurExperimentResult res;
    res.mode = mode;
    ImageF reconstruction;
    if (mode == DeblurMode::kFba) {
      std::vector<ImageF> images;
      for (const auto& frame : burst.frames) images.push_back(frame.image);
      reconstruction = fba(images, p, sigma_s);
      for (std::size_t i = 0; i < images.size(); ++i) res.selected.push_back(i);
    } else {
      std::vector<Frame> prefix = sorted;
      if (mode == DeblurMode::kIfbaFixedK) {
        if (k < 1 || k > sorted.size())
          throw ParameterError("run_deblur_experiment: k out of range");
        prefix.assign(sorted.begin(), sorted.begin() + k);
      }
      const bool stop = mode == DeblurMode::kIfba;
      const SelectionResult sel =
          ifba_deblur(prefix, p, sigma_s, stop ? &comparator : nullptr, stop);
      reconstruction = sel.reconstruction;
      res.selected = sel.selected;
      res.trace = sel.trace;
      res.stopped = sel.stopped_at.has_value();
      res.stopped_at = sel.stopped_at.value_or(0);
    }
    const QualityReport q = quality(sharp, reconstruction);
    res.psnr_db = q.psnr_db;
    res.ssim = q.ssim;
    results.push_back(std::move(res));
  }
  return results;
}

}  // namespace burstforge
