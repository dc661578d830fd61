#pragma once

#include <string>
#include <vector>

#include "burstforge/trajectory.hpp"

namespace burstforge {

// Point-spread function on an odd k x k grid with the center cell at
// ((k-1)/2, (k-1)/2). Weights are nonnegative and sum to 1.
struct Psf {
  int size = 0;
  std::vector<double> weights;

  Psf() = default;
  explicit Psf(int k) : size(k), weights(static_cast<std::size_t>(k) * k) {}

  int center() const { return (size - 1) / 2; }
  double& at(int y, int x) {
    return weights[static_cast<std::size_t>(y) * size + x];
  }
  double at(int y, int x) const {
    return weights[static_cast<std::size_t>(y) * size + x];
  }

  static Psf delta(int k);

  double sum() const;
};

// Scalar summary of a kernel: trajectory covariance eigenvalues (C_l >= C_s),
// half harmonic mean hm = C_l*C_s / (C_l + C_s), path length m and the zeta
// blur-complexity score.
struct KernelDescriptors {
  double c_large = 0.0;
  double c_small = 0.0;
  double hm = 0.0;
  double m = 0.0;
  double zeta = 0.0;
};

// Samples the continuous trajectory onto the pixel grid: every point splats
// bilinear weights onto its four neighboring cells, and the grid is
// normalized to sum 1. Points are placed relative to the grid center. Throws
// OutOfSupportError (naming the offending extent) if a point leaves the grid.
Psf rasterize_psf(const Trajectory& traj, int size = 63);

// Blur-complexity score
//   zeta = 100 * sum_k h(k1, k2) * (1 - exp(-(k1^2 + k2^2) / (2 sigma^2)))
// over integer offsets (k1, k2) from the kernel center; in [0, 100).
double zeta(const Psf& psf, double sigma = 32.0);

KernelDescriptors kernel_descriptors(const Trajectory& traj, const Psf& psf);

// Plain-text kernel files: header "PSF k k" followed by k rows of k values.
void save_psf(const Psf& psf, const std::string& path);
Psf load_psf(const std::string& path);

}  // namespace burstforge
