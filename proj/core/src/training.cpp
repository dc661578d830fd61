#include "burstforge/training.hpp"

#include <array>
#include <cmath>

#include "burstforge/error.hpp"

namespace burstforge {

namespace {

constexpr std::size_t kDims = 5;
constexpr double kMinLr = 1e-12;
constexpr double kProbFloor = 1e-12;

double bce_loss(const std::vector<std::array<double, kDims>>& diffs,
                const std::vector<int>& labels,
                const std::array<double, kDims>& w) {
  double loss = 0.0;
  for (std::size_t i = 0; i < diffs.size(); ++i) {
    double z = 0.0;
    for (std::size_t k = 0; k < kDims; ++k) z += w[k] * diffs[i][k];
    const double p = 1.0 / (1.0 + std::exp(-z));
    const double target = labels[i];
    loss -= target * std::log(std::max(p, kProbFloor)) +
            (1.0 - target) * std::log(std::max(1.0 - p, kProbFloor));
  }
  return loss / static_cast<double>(diffs.size());
}

}  // namespace

ComparatorModel train_feature_comparator(const std::vector<TrainingPair>& pairs,
                                         int epochs, double lr) {
  if (pairs.empty())
    throw ParameterError("train_feature_comparator: no training pairs");
  if (epochs < 0)
    throw ParameterError("train_feature_comparator: negative epochs");
  for (const auto& pair : pairs)
    if (pair.label != 0 && pair.label != 1)
      throw ParameterError("train_feature_comparator: labels must be 0 or 1");

  const std::size_t n = pairs.size();
  std::vector<std::array<double, kDims>> diffs(n);
  std::vector<int> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto fa = pairs[i].first.as_array();
    const auto fb = pairs[i].second.as_array();
    for (std::size_t k = 0; k < kDims; ++k) diffs[i][k] = fa[k] - fb[k];
    labels[i] = pairs[i].label;
  }

  // Scale each difference dimension to unit standard deviation. No centering:
  // an offset would act as a hidden bias and break the exact antisymmetry.
  std::array<double, kDims> scale{};
  for (std::size_t k = 0; k < kDims; ++k) {
    double sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) sq += diffs[i][k] * diffs[i][k];
    const double sd = std::sqrt(sq / static_cast<double>(n));
    scale[k] = sd > 1e-12 ? sd : 1.0;
    for (std::size_t i = 0; i < n; ++i) diffs[i][k] /= scale[k];
  }

  ComparatorModel model;
  model.trained_on = n;
  std::array<double, kDims> w{};
  double loss = bce_loss(diffs, labels, w);
  double rate = lr;
  for (int epoch = 0; epoch < epochs && rate > kMinLr; ++epoch) {
    std::array<double, kDims> grad{};
    for (std::size_t i = 0; i < n; ++i) {
      double z = 0.0;
      for (std::size_t k = 0; k < kDims; ++k) z += w[k] * diffs[i][k];
      const double p = 1.0 / (1.0 + std::exp(-z));
      const double err = p - labels[i];
      for (std::size_t k = 0; k < kDims; ++k) grad[k] += err * diffs[i][k];
    }
    for (std::size_t k = 0; k < kDims; ++k)
      grad[k] /= static_cast<double>(n);

    // Halve the rate until the step does not increase the loss.
    std::array<double, kDims> next = w;
    double next_loss = loss;
    while (rate > kMinLr) {
      for (std::size_t k = 0; k < kDims; ++k)
        next[k] = w[k] - rate * grad[k];
      next_loss = bce_loss(diffs, labels, next);
      if (next_loss <= loss) break;
      rate *= 0.5;
    }
    if (next_loss <= loss) {
      w = next;
      loss = next_loss;
    }
    model.loss_history.push_back(loss);
  }

  for (std::size_t k = 0; k < kDims; ++k) model.weights[k] = w[k] / scale[k];
  return model;
}

double pairwise_accuracy(const ComparatorModel& model,
                         const std::vector<TrainingPair>& pairs) {
  if (pairs.empty()) throw ParameterError("pairwise_accuracy: no pairs");
  std::size_t correct = 0;
  for (const auto& pair : pairs) {
    const double p = model.score(pair.first, pair.second);
    const int predicted = p >= 0.5 ? 1 : 0;
    if (predicted == pair.label) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(pairs.size());
}

}  // namespace burstforge
