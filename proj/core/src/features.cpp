#include "burstforge/features.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "burstforge/error.hpp"
#include "burstforge/fft.hpp"

namespace burstforge {

namespace {

constexpr double kL2Guard = 1e-9;

double high_frequency_ratio(const MagnitudeMap& plane) {
  ImageF gray(plane.height, plane.width, 1);
  std::copy(plane.values.begin(), plane.values.end(), gray.data.begin());
  const Spectrum spec = fft2(gray);

  const int h = plane.height;
  const int w = plane.width;
  const double radius = std::min(h, w) / 4.0;
  double total_ac = 0.0;
  double high = 0.0;
  for (int y = 0; y < h; ++y) {
    const int fy = std::min(y, h - y);
    for (int x = 0; x < w; ++x) {
      if (x == 0 && y == 0) continue;  // DC excluded
      const int fx = std::min(x, w - x);
      const double energy = std::norm(spec.at(y, x));
      total_ac += energy;
      if (std::sqrt(double(fy) * fy + double(fx) * fx) > radius)
        high += energy;
    }
  }
  return total_ac > kL2Guard ? high / total_ac : 0.0;
}

}  // namespace

const std::array<std::string, 5>& FeatureVector::names() {
  static const std::array<std::string, 5> n = {
      "log_nsps", "grad_energy", "sgrd", "lap_var", "hf_ratio"};
  return n;
}

FeatureVector features(const ImageF& img) {
  if (img.height < 16 || img.width < 16)
    throw DimensionError("features: image must be at least 16x16");

  const MagnitudeMap l = luma(img);
  const int h = l.height;
  const int w = l.width;

  FeatureVector fv;

  // Central differences on the interior.
  std::vector<double> magnitudes;
  magnitudes.reserve(static_cast<std::size_t>(h - 2) * (w - 2));
  double l1 = 0.0, l2_sq = 0.0, energy = 0.0;
  for (int y = 1; y < h - 1; ++y) {
    for (int x = 1; x < w - 1; ++x) {
      const double gx = 0.5 * (l.at(y, x + 1) - l.at(y, x - 1));
      const double gy = 0.5 * (l.at(y + 1, x) - l.at(y - 1, x));
      const double mag_sq = gx * gx + gy * gy;
      l1 += std::abs(gx) + std::abs(gy);
      l2_sq += mag_sq;
      energy += mag_sq;
      magnitudes.push_back(std::sqrt(mag_sq));
    }
  }
  const double count = static_cast<double>(magnitudes.size());
  fv.grad_energy = energy / count;
  const double l2 = std::sqrt(l2_sq);
  fv.log_nsps = l2 >= kL2Guard ? std::log(l1 / l2) : 0.0;

  const std::size_t k = std::max<std::size_t>(
      1, static_cast<std::size_t>(0.3 * magnitudes.size()));
  std::nth_element(magnitudes.begin(), magnitudes.begin() + (k - 1),
                   magnitudes.end());
  double small_sum = 0.0;
  for (std::size_t i = 0; i < k; ++i) small_sum += magnitudes[i];
  fv.sgrd = small_sum / static_cast<double>(k);

  // 4-neighbor Laplacian, population variance over the interior.
  double lap_sum = 0.0, lap_sq = 0.0;
  for (int y = 1; y < h - 1; ++y) {
    for (int x = 1; x < w - 1; ++x) {
      const double lap = l.at(y + 1, x) + l.at(y - 1, x) + l.at(y, x + 1) +
                         l.at(y, x - 1) - 4.0 * l.at(y, x);
      lap_sum += lap;
      lap_sq += lap * lap;
    }
  }
  const double lap_mean = lap_sum / count;
  fv.lap_var = lap_sq / count - lap_mean * lap_mean;

  fv.hf_ratio = high_frequency_ratio(l);
  return fv;
}

double sharpness_score(const std::string& metric, const ImageF& img) {
  const FeatureVector fv = features(img);
  if (metric == "sgrd") return fv.sgrd;
  if (metric == "nsps") return -fv.log_nsps;  // sparser gradients = sharper
  if (metric == "lapvar") return fv.lap_var;
  if (metric == "gradenergy") return fv.grad_energy;
  if (metric == "hfratio") return fv.hf_ratio;
  throw ParameterError("sharpness_score: unknown metric '" + metric + "'");
}

}  // namespace burstforge
