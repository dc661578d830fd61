#pragma once

#include "burstforge/image.hpp"

namespace burstforge {

struct QualityReport {
  double mse = 0.0;
  double psnr_db = 0.0;
  double ssim = 0.0;
};

// Full-reference quality of img against ref (identical shapes required).
//   mse  : mean squared sample difference over all channels
//   psnr : 10 * log10(1 / mse) with an mse floor of 1e-12 (120 dB cap;
//          unit-range images, peak 1.0)
//   ssim : 11x11 Gaussian window (sigma 1.5), C1 = 0.01^2, C2 = 0.03^2,
//          mean over fully covered windows, averaged across channels
QualityReport quality(const ImageF& ref, const ImageF& img);

}  // namespace burstforge
