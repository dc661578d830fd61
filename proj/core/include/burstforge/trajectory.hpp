#pragma once

#include <vector>

#include "burstforge/random.hpp"

namespace burstforge {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

// Parameters of the second-order camera-shake walk.
struct TrajectoryParams {
  int num_samples = 2000;        // continuous positions per trajectory
  double anxiety = 0.008;        // gain on the Gaussian velocity noise
  double impulse_prob = 0.005;   // per-step chance of the v <- -2v reversal
  double centripetal_gain = 0.7; // pull back toward the walk origin
  double target_length = 10.0;   // total path length m after rescaling, px
};

// Continuous shake path. Points are centered so their mean is the origin and
// rigidly rescaled so the total path length equals `length`.
struct Trajectory {
  std::vector<Vec2> points;
  double length = 0.0;

  double path_length() const;
};

// Second-order random walk: each step adds anxiety-scaled Gaussian noise and
// a centripetal pull to the velocity, with an impulsive reversal (v <- -2v)
// at probability impulse_prob, then integrates the position. The raw walk is
// rescaled to the target length and re-centered to zero mean. Deterministic
// for a given generator state. A walk that never moves stays at the origin.
Trajectory gen_trajectory(const TrajectoryParams& params, RandomSource& rng);

}  // namespace burstforge
