#include "burstforge/ranking.hpp"

#include <algorithm>
#include <numeric>

#include "burstforge/error.hpp"
#include "burstforge/parallel.hpp"

namespace burstforge {

namespace {

double guarded_compare(const Comparator& comparator, const Frame& a,
                       const Frame& b, std::size_t i, std::size_t j) {
  try {
    return comparator.compare(a, b);
  } catch (const ComparatorError&) {
    throw;
  } catch (const std::exception& e) {
    throw ComparatorError("comparator failed on pair (" + std::to_string(i) +
                          ", " + std::to_string(j) + "): " + e.what());
  }
}

}  // namespace

PairProb pair_probabilities(const std::vector<Frame>& burst,
                            const Comparator& comparator,
                            PairStrategy strategy) {
  if (burst.empty()) throw ParameterError("pair_probabilities: empty burst");
  for (const auto& frame : burst)
    if (!frame.image.same_shape(burst[0].image))
      throw DimensionError("pair_probabilities: frames differ in shape");

  const std::size_t n = burst.size();
  PairProb pp;
  pp.n = n;
  pp.strategy = strategy;
  pp.p.assign(n * n, 0.5);

  std::vector<std::pair<std::size_t, std::size_t>> todo;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) todo.push_back({i, j});

  if (strategy == PairStrategy::kFull) {
    std::vector<double> forward(todo.size()), backward(todo.size());
    parallel_for(todo.size(), [&](std::size_t k) {
      const auto [i, j] = todo[k];
      forward[k] = guarded_compare(comparator, burst[i], burst[j], i, j);
      backward[k] = guarded_compare(comparator, burst[j], burst[i], j, i);
    });
    for (std::size_t k = 0; k < todo.size(); ++k) {
      const auto [i, j] = todo[k];
      const double total = forward[k] + backward[k];
      if (total <= 0.0)
        throw DegeneratePairError("pair (" + std::to_string(i) + ", " +
                                  std::to_string(j) +
                                  "): f(i,j) + f(j,i) = 0");
      pp.at(i, j) = forward[k] / total;
      pp.at(j, i) = backward[k] / total;
    }
  } else {
    std::vector<double> forward(todo.size());
    parallel_for(todo.size(), [&](std::size_t k) {
      const auto [i, j] = todo[k];
      forward[k] = guarded_compare(comparator, burst[i], burst[j], i, j);
    });
    for (std::size_t k = 0; k < todo.size(); ++k) {
      const auto [i, j] = todo[k];
      pp.at(i, j) = forward[k];
      pp.at(j, i) = 1.0 - forward[k];
    }
  }
  return pp;
}

RankResult rank_scores(const PairProb& pp, RankMode mode) {
  const std::size_t n = pp.n;
  RankResult result;
  result.mode = mode;
  result.r_crisp.assign(n, 0);
  result.r_soft.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (pp.at(i, j) >= 0.5) ++result.r_crisp[i];
      result.r_soft[i] += pp.at(i, j);
    }
  }

  result.gamma.resize(n);
  std::iota(result.gamma.begin(), result.gamma.end(), std::size_t{0});
  if (mode == RankMode::kCrisp) {
    std::stable_sort(result.gamma.begin(), result.gamma.end(),
                     [&](std::size_t a, std::size_t b) {
                       return result.r_crisp[a] < result.r_crisp[b];
                     });
  } else {
    std::stable_sort(result.gamma.begin(), result.gamma.end(),
                     [&](std::size_t a, std::size_t b) {
                       return result.r_soft[a] < result.r_soft[b];
                     });
  }
  return result;
}

std::vector<Frame> sort_burst(std::vector<Frame> burst,
                              const RankResult& ranks) {
  if (burst.size() != ranks.gamma.size())
    throw DimensionError("sort_burst: rank/burst length mismatch");
  std::vector<Frame> sorted;
  sorted.reserve(burst.size());
  for (std::size_t pos : ranks.gamma) sorted.push_back(std::move(burst[pos]));
  return sorted;
}

const char* to_string(PairStrategy strategy) {
  return strategy == PairStrategy::kFull ? "full" : "triangular";
}

const char* to_string(RankMode mode) {
  return mode == RankMode::kCrisp ? "crisp" : "soft";
}

}  // namespace burstforge
