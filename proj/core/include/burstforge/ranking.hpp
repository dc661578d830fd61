#pragma once

#include <string>
#include <vector>

#include "burstforge/burst.hpp"
#include "burstforge/comparator.hpp"

namespace burstforge {

enum class PairStrategy {
  kFull,        // evaluate every ordered pair, normalize by Eq-style repair
  kTriangular,  // evaluate i < j only, mirror as 1 - P
};

// Pair probability matrix: P[i][j] is the probability that frame i is
// blurrier than frame j. The diagonal is 0.5 and P[i][j] + P[j][i] = 1.
struct PairProb {
  std::size_t n = 0;
  std::vector<double> p;  // row-major n x n
  PairStrategy strategy = PairStrategy::kTriangular;

  double at(std::size_t i, std::size_t j) const { return p[i * n + j]; }
  double& at(std::size_t i, std::size_t j) { return p[i * n + j]; }
};

enum class RankMode { kCrisp, kSoft };

struct RankResult {
  std::vector<int> r_crisp;     // count of pairs judged blurrier (P >= 0.5)
  std::vector<double> r_soft;   // sum of pair probabilities
  std::vector<std::size_t> gamma;  // permutation, sharpest first; stable on
                                   // ties (original order preserved)
  RankMode mode = RankMode::kSoft;
};

// Builds the pair matrix over the burst. The full strategy evaluates the
// comparator on both orderings of every pair and normalizes
//   P[i][j] = f(i,j) / (f(i,j) + f(j,i)),
// which repairs comparators that violate trichotomy; the triangular strategy
// takes the i < j outputs as-is and mirrors them, spending n(n-1)/2 calls.
// Comparator failures are rethrown naming the pair; a pair with
// f(i,j) + f(j,i) = 0 raises DegeneratePairError.
PairProb pair_probabilities(const std::vector<Frame>& burst,
                            const Comparator& comparator,
                            PairStrategy strategy);

// Crisp and soft scores (lower = sharper) plus the sorting permutation for
// the requested mode.
RankResult rank_scores(const PairProb& pp, RankMode mode);

// Permutes the frames by gamma; metadata travels with each frame.
std::vector<Frame> sort_burst(std::vector<Frame> burst,
                              const RankResult& ranks);

const char* to_string(PairStrategy strategy);
const char* to_string(RankMode mode);

}  // namespace burstforge
