#pragma once

#include <vector>

#include "burstforge/comparator.hpp"
#include "burstforge/features.hpp"

namespace burstforge {

// One labeled comparison: label 1 means the first image is the blurrier one.
struct TrainingPair {
  FeatureVector first;
  FeatureVector second;
  int label = 0;
};

// Full-batch gradient descent on the binary cross entropy of
// logistic(w . (phi_first - phi_second)). Feature differences are scaled by
// their per-dimension standard deviation during optimization and the scaling
// is folded back into the returned weights, so the stored model acts on raw
// features. When an epoch would increase the loss the step is rolled back
// and the learning rate halved, which makes the reported per-epoch loss
// non-increasing. lr = 0 returns the zero model.
ComparatorModel train_feature_comparator(const std::vector<TrainingPair>& pairs,
                                         int epochs, double lr);

// Fraction of pairs whose predicted blurrier side matches the label.
double pairwise_accuracy(const ComparatorModel& model,
                         const std::vector<TrainingPair>& pairs);

}  // namespace burstforge
