#include "burstforge/smoothing.hpp"

#include <cmath>
#include <vector>

#include "burstforge/error.hpp"

namespace burstforge {

namespace {

std::vector<double> gaussian_taps(double sigma) {
  const int radius = static_cast<int>(std::ceil(3.0 * sigma));
  std::vector<double> taps(2 * radius + 1);
  double total = 0.0;
  for (int i = -radius; i <= radius; ++i) {
    taps[i + radius] = std::exp(-(i * i) / (2.0 * sigma * sigma));
    total += taps[i + radius];
  }
  for (double& t : taps) t /= total;
  return taps;
}

}  // namespace

MagnitudeMap gaussian_smooth(const MagnitudeMap& map, double sigma_s) {
  if (sigma_s < 0.0)
    throw ParameterError("gaussian_smooth: sigma_s must be >= 0");
  if (sigma_s == 0.0) return map;

  const std::vector<double> taps = gaussian_taps(sigma_s);
  const int radius = static_cast<int>(taps.size() / 2);
  const int h = map.height;
  const int w = map.width;

  MagnitudeMap rows(h, w);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double acc = 0.0;
      for (int t = -radius; t <= radius; ++t)
        acc += taps[t + radius] * map.at(y, reflect_index(x + t, w));
      rows.at(y, x) = acc;
    }
  }
  MagnitudeMap out(h, w);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double acc = 0.0;
      for (int t = -radius; t <= radius; ++t)
        acc += taps[t + radius] * rows.at(reflect_index(y + t, h), x);
      out.at(y, x) = acc;
    }
  }
  return out;
}

}  // namespace burstforge
