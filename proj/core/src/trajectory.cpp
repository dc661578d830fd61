#include "burstforge/trajectory.hpp"

#include <cmath>

#include "burstforge/error.hpp"

namespace burstforge {

double Trajectory::path_length() const {
  double total = 0.0;
  for (std::size_t k = 1; k < points.size(); ++k) {
    const double dx = points[k].x - points[k - 1].x;
    const double dy = points[k].y - points[k - 1].y;
    total += std::sqrt(dx * dx + dy * dy);
  }
  return total;
}

Trajectory gen_trajectory(const TrajectoryParams& params, RandomSource& rng) {
  if (params.num_samples < 1)
    throw ParameterError("gen_trajectory: num_samples must be >= 1");
  if (params.anxiety < 0.0)
    throw ParameterError("gen_trajectory: anxiety must be >= 0");
  if (params.impulse_prob < 0.0 || params.impulse_prob > 1.0)
    throw ParameterError("gen_trajectory: impulse_prob must be in [0, 1]");
  if (params.target_length < 0.0)
    throw ParameterError("gen_trajectory: target_length must be >= 0");

  Trajectory traj;
  traj.points.resize(params.num_samples);

  Vec2 p{0.0, 0.0};
  Vec2 v{0.0, 0.0};
  const double pull = params.centripetal_gain / params.num_samples;
  for (int k = 0; k < params.num_samples; ++k) {
    v.x += params.anxiety * rng.normal() - pull * p.x;
    v.y += params.anxiety * rng.normal() - pull * p.y;
    if (rng.bernoulli(params.impulse_prob)) {
      v.x *= -2.0;
      v.y *= -2.0;
    }
    p.x += v.x;
    p.y += v.y;
    traj.points[k] = p;
  }

  // Rigid rescale to the requested path length, then re-center.
  const double raw_length = traj.path_length();
  const double scale =
      raw_length > 0.0 ? params.target_length / raw_length : 0.0;
  Vec2 mean{0.0, 0.0};
  for (auto& pt : traj.points) {
    pt.x *= scale;
    pt.y *= scale;
    mean.x += pt.x;
    mean.y += pt.y;
  }
  mean.x /= traj.points.size();
  mean.y /= traj.points.size();
  for (auto& pt : traj.points) {
    pt.x -= mean.x;
    pt.y -= mean.y;
  }
  traj.length = raw_length > 0.0 ? params.target_length : 0.0;
  return traj;
}

}  // namespace burstforge
