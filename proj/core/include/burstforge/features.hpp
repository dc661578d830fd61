#pragma once

#include <array>
#include <string>

#include "burstforge/image.hpp"

namespace burstforge {

// No-reference sharpness features, all computed on luma.
struct FeatureVector {
  double log_nsps = 0.0;     // log(|grad|_1 / |grad|_2), 0 when |grad|_2 < 1e-9
  double grad_energy = 0.0;  // mean squared gradient magnitude
  double sgrd = 0.0;         // mean of the smallest 30% gradient magnitudes
  double lap_var = 0.0;      // variance of the 4-neighbor Laplacian
  double hf_ratio = 0.0;     // spectral energy beyond radius min(h,w)/4
                             // over total AC energy

  std::array<double, 5> as_array() const {
    return {log_nsps, grad_energy, sgrd, lap_var, hf_ratio};
  }
  static const std::array<std::string, 5>& names();
};

// Gradients use central differences on interior pixels; requires >= 16x16.
FeatureVector features(const ImageF& img);

// Scalar sharpness score for the named single-metric comparator; higher
// means sharper. Supported: "sgrd", "nsps", "lapvar", "gradenergy",
// "hfratio".
double sharpness_score(const std::string& metric, const ImageF& img);

}  // namespace burstforge
