#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "burstforge/burst.hpp"
#include "burstforge/comparator.hpp"
#include "burstforge/fft.hpp"
#include "burstforge/image.hpp"

namespace burstforge {

// Denominator guard: omega + kOmegaEps avoids 0/0 at frequencies where every
// smoothed magnitude vanishes; there the weighted sum is zero as well, so
// the output coefficient is zero.
inline constexpr double kOmegaEps = 1e-12;

// Channel-mean coefficient magnitude, Gaussian-smoothed by sigma_s.
MagnitudeMap smoothed_mean_magnitude(const Spectrum& spec, double sigma_s);

// Per-frame weight maps w_t(f) = m_t(f)^p / (sum_i m_i(f)^p + kOmegaEps).
std::vector<MagnitudeMap> fba_weights(const std::vector<MagnitudeMap>& mags,
                                      double p);

// Fourier burst accumulation: per-frequency weighted average of the frame
// spectra with weights proportional to smoothed magnitude^p, shared across
// channels. fba() clamps to [0, 1]; fba_raw() returns the pre-clamp real
// part. p = 0 reduces to the pixelwise mean.
ImageF fba(const std::vector<ImageF>& burst, double p, double sigma_s);
ImageF fba_raw(const std::vector<ImageF>& burst, double p, double sigma_s);

// Running state of the incremental accumulation: omega accumulates the
// magnitude powers, weighted_sum the magnitude-weighted spectra. Absorbing
// frames in any order reproduces the batch result; the class itself is
// strictly sequential.
class SpectralAccumulator {
 public:
  SpectralAccumulator(double p, double sigma_s) : p_(p), sigma_s_(sigma_s) {}

  // Absorbs one frame and returns the raw (unclamped) reconstruction
  //   ifft2(weighted_sum / omega).
  // The first call fixes the dimensions; the first reconstruction equals the
  // first frame.
  ImageF absorb(const ImageF& frame);

  const MagnitudeMap& omega() const { return omega_; }
  std::size_t frames_absorbed() const { return t_; }
  double p() const { return p_; }
  double sigma_s() const { return sigma_s_; }

 private:
  double p_;
  double sigma_s_;
  std::size_t t_ = 0;
  MagnitudeMap omega_;
  Spectrum weighted_sum_;
};

struct SelectionResult {
  ImageF reconstruction;                 // clamped to [0, 1]
  std::vector<std::size_t> selected;     // original frame indices, a prefix
                                         // of the sorted order
  std::optional<std::size_t> stopped_at; // iteration of the degradation stop
  std::vector<double> trace;             // degradation probability per step
};

// Incremental deblurring over an already sorted burst (sharpest first).
// Each step absorbs the next frame; with `stop` enabled the step-t
// reconstruction is compared against the previous one through the
// trichotomy-normalized comparator, and accumulation halts with the previous
// reconstruction once the new one is judged blurrier (probability >= 0.5).
// `degradation` may be null when stop is disabled.
SelectionResult ifba_deblur(const std::vector<Frame>& sorted, double p,
                            double sigma_s, const Comparator* degradation,
                            bool stop);

}  // namespace burstforge
