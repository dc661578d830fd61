#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "burstforge/burst.hpp"
#include "burstforge/features.hpp"
#include "burstforge/image.hpp"

namespace burstforge {

// Pairwise blur comparison: compare(a, b) is the probability that frame a is
// blurrier than frame b, in [0, 1]. Implementations are immutable after
// construction and safe to call concurrently.
class Comparator {
 public:
  virtual ~Comparator() = default;
  virtual double compare(const Frame& a, const Frame& b) const = 0;
  virtual std::string name() const = 0;
};

// Ground-truth comparator: 1 if zeta_a > zeta_b, 0 if smaller, 0.5 on a tie
// (|difference| <= 1e-12). Frames without zeta raise MissingLabelError.
class OracleComparator : public Comparator {
 public:
  double compare(const Frame& a, const Frame& b) const override;
  std::string name() const override { return "oracle"; }
};

// Inverts another comparator while preserving trichotomy.
class InvertedComparator : public Comparator {
 public:
  explicit InvertedComparator(std::shared_ptr<const Comparator> inner)
      : inner_(std::move(inner)) {}
  double compare(const Frame& a, const Frame& b) const override {
    return 1.0 - inner_->compare(a, b);
  }
  std::string name() const override { return "inverted-" + inner_->name(); }

 private:
  std::shared_ptr<const Comparator> inner_;
};

// logistic(s_b - s_a) for a scalar sharpness score s; evaluated on a
// centered tile of at most `tile` pixels per side.
class SingleMetricComparator : public Comparator {
 public:
  SingleMetricComparator(std::string metric, int tile = 200)
      : metric_(std::move(metric)), tile_(tile) {}
  double compare(const Frame& a, const Frame& b) const override;
  std::string name() const override { return metric_; }

 private:
  std::string metric_;
  int tile_;
};

// Linear model on antisymmetric feature differences:
//   P(a blurrier than b) = logistic(w . (phi_a - phi_b))
// The zero bias makes compare(a,b) + compare(b,a) = 1 hold by construction.
struct ComparatorModel {
  std::array<double, 5> weights{};
  std::size_t trained_on = 0;
  std::vector<double> loss_history;  // per-epoch training BCE

  double score(const FeatureVector& a, const FeatureVector& b) const;
};

void save_model(const ComparatorModel& model, const std::string& path);
ComparatorModel load_model(const std::string& path);

class FeatureModelComparator : public Comparator {
 public:
  explicit FeatureModelComparator(ComparatorModel model, int tile = 200)
      : model_(std::move(model)), tile_(tile) {}
  double compare(const Frame& a, const Frame& b) const override;
  std::string name() const override { return "features"; }
  const ComparatorModel& model() const { return model_; }

 private:
  ComparatorModel model_;
  int tile_;
};

// Per-pair probabilities supplied by an external model as CSV rows "i,j,p".
// Looks up (a.index, b.index); a stored reverse pair is used as 1 - p.
class ExternalScoresComparator : public Comparator {
 public:
  explicit ExternalScoresComparator(const std::string& csv_path);
  double compare(const Frame& a, const Frame& b) const override;
  std::string name() const override { return "external"; }

 private:
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, double>> scores_;
};

// Ranks a pair by their FBA overall weights energy; higher energy = sharper.
class OweComparator : public Comparator {
 public:
  OweComparator(double p = 11.0, double sigma_s = 50.0, int tile = 200)
      : p_(p), sigma_s_(sigma_s), tile_(tile) {}
  double compare(const Frame& a, const Frame& b) const override;
  std::string name() const override { return "owe"; }

 private:
  double p_;
  double sigma_s_;
  int tile_;
};

}  // namespace burstforge
