#pragma once

#include <cstdint>
#include <random>

namespace burstforge {

// Deterministic random source. All draws go through explicit arithmetic on
// the raw mt19937_64 output rather than the standard distributions, whose
// algorithms are implementation-defined; the same seed therefore yields the
// same stream on every platform and toolchain.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform();

  // Uniform in [lo, hi).
  double uniform(double lo, double hi);

  // Uniform integer in [lo, hi], inclusive, by rejection.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  bool bernoulli(double p) { return uniform() < p; }

  // Standard normal via Box-Muller; the second value of each pair is cached.
  double normal();

 private:
  std::mt19937_64 engine_;
  bool has_cached_ = false;
  double cached_ = 0.0;
};

// Per-item seed derivation: frame/pair i under master seed s uses s ^ i, so
// parallel generation order cannot change any stream.
inline std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index) {
  return seed ^ index;
}

}  // namespace burstforge
