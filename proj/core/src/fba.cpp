#include "burstforge/fba.hpp"

#include <cmath>

#include "burstforge/error.hpp"
#include "burstforge/parallel.hpp"
#include "burstforge/smoothing.hpp"

namespace burstforge {

namespace {

constexpr double kMaxImagResidual = 1e-8;

ImageF real_part_checked(const Spectrum& spec) {
  double max_imag = 0.0;
  ImageF out = ifft2_real(spec, &max_imag);
  if (max_imag >= kMaxImagResidual)
    throw Error("fba: imaginary residual " + std::to_string(max_imag) +
                " exceeds 1e-8; inputs are not a real burst");
  return out;
}

}  // namespace

MagnitudeMap smoothed_mean_magnitude(const Spectrum& spec, double sigma_s) {
  MagnitudeMap mean(spec.height, spec.width);
  const std::size_t plane =
      static_cast<std::size_t>(spec.height) * spec.width;
  for (int c = 0; c < spec.channels; ++c)
    for (std::size_t i = 0; i < plane; ++i)
      mean.values[i] += std::abs(spec.coeffs[c * plane + i]);
  const double inv_c = 1.0 / spec.channels;
  for (double& v : mean.values) v *= inv_c;
  return gaussian_smooth(mean, sigma_s);
}

std::vector<MagnitudeMap> fba_weights(const std::vector<MagnitudeMap>& mags,
                                      double p) {
  if (mags.empty()) throw ParameterError("fba_weights: empty burst");
  const std::size_t cells = mags[0].values.size();
  std::vector<MagnitudeMap> weights(mags.size(),
                                    MagnitudeMap(mags[0].height, mags[0].width));
  for (std::size_t i = 0; i < cells; ++i) {
    double denom = kOmegaEps;
    for (const auto& m : mags) denom += std::pow(m.values[i], p);
    for (std::size_t t = 0; t < mags.size(); ++t)
      weights[t].values[i] = std::pow(mags[t].values[i], p) / denom;
  }
  return weights;
}

ImageF fba_raw(const std::vector<ImageF>& burst, double p, double sigma_s) {
  if (burst.empty()) throw ParameterError("fba: empty burst");
  if (p < 0.0) throw ParameterError("fba: p must be >= 0");
  for (const auto& frame : burst)
    if (!frame.same_shape(burst[0]))
      throw DimensionError("fba: frames have mismatched shapes");

  const std::size_t n = burst.size();
  std::vector<Spectrum> spectra(n);
  std::vector<MagnitudeMap> mags(n);
  parallel_for(n, [&](std::size_t t) {
    spectra[t] = fft2(burst[t]);
    mags[t] = smoothed_mean_magnitude(spectra[t], sigma_s);
  });

  const int h = burst[0].height;
  const int w = burst[0].width;
  const int c = burst[0].channels;
  const std::size_t plane = static_cast<std::size_t>(h) * w;

  Spectrum aggregate(h, w, c);
  for (std::size_t i = 0; i < plane; ++i) {
    double denom = kOmegaEps;
    for (std::size_t t = 0; t < n; ++t)
      denom += std::pow(mags[t].values[i], p);
    for (std::size_t t = 0; t < n; ++t) {
      const double wt = std::pow(mags[t].values[i], p) / denom;
      for (int ch = 0; ch < c; ++ch)
        aggregate.coeffs[ch * plane + i] +=
            wt * spectra[t].coeffs[ch * plane + i];
    }
  }
  return real_part_checked(aggregate);
}

ImageF fba(const std::vector<ImageF>& burst, double p, double sigma_s) {
  return clamped01(fba_raw(burst, p, sigma_s));
}

ImageF SpectralAccumulator::absorb(const ImageF& frame) {
  if (p_ < 0.0) throw ParameterError("ifba: p must be >= 0");
  if (t_ == 0) {
    omega_ = MagnitudeMap(frame.height, frame.width);
    weighted_sum_ = Spectrum(frame.height, frame.width, frame.channels);
  } else if (frame.height != weighted_sum_.height ||
             frame.width != weighted_sum_.width ||
             frame.channels != weighted_sum_.channels) {
    throw DimensionError("ifba: frame shape differs from the accumulator");
  }

  const Spectrum spec = fft2(frame);
  const MagnitudeMap mag = smoothed_mean_magnitude(spec, sigma_s_);
  const std::size_t plane = static_cast<std::size_t>(frame.height) *
                            frame.width;
  for (std::size_t i = 0; i < plane; ++i) {
    const double power = std::pow(mag.values[i], p_);
    omega_.values[i] += power;
    for (int c = 0; c < frame.channels; ++c)
      weighted_sum_.coeffs[c * plane + i] += power * spec.coeffs[c * plane + i];
  }
  ++t_;

  Spectrum current(frame.height, frame.width, frame.channels);
  for (std::size_t i = 0; i < plane; ++i) {
    const double denom = omega_.values[i] + kOmegaEps;
    for (int c = 0; c < frame.channels; ++c)
      current.coeffs[c * plane + i] = weighted_sum_.coeffs[c * plane + i] / denom;
  }
  return real_part_checked(current);
}

SelectionResult ifba_deblur(const std::vector<Frame>& sorted, double p,
                            double sigma_s, const Comparator* degradation,
                            bool stop) {
  if (sorted.empty()) throw ParameterError("ifba_deblur: empty burst");
  if (stop && degradation == nullptr)
    throw ParameterError("ifba_deblur: stop requires a comparator");

  SpectralAccumulator acc(p, sigma_s);
  SelectionResult result;
  ImageF previous;
  for (std::size_t t = 0; t < sorted.size(); ++t) {
    ImageF current = clamped01(acc.absorb(sorted[t].image));
    if (stop && t > 0) {
      // Trichotomy-normalized probability that the new reconstruction is
      // blurrier than the previous one (Eq. 2 applied to the stop check).
      Frame now{current, std::nullopt, std::nullopt};
      Frame before{previous, std::nullopt, std::nullopt};
      const double forward = degradation->compare(now, before);
      const double backward = degradation->compare(before, now);
      if (forward + backward <= 0.0)
        throw DegeneratePairError(
            "ifba_deblur: degenerate degradation check at step " +
            std::to_string(t));
      const double prob = forward / (forward + backward);
      result.trace.push_back(prob);
      if (prob >= 0.5) {
        result.stopped_at = t;
        result.reconstruction = std::move(previous);
        return result;
      }
    }
    result.selected.push_back(sorted[t].index.value_or(t));
    previous = std::move(current);
  }
  result.reconstruction = std::move(previous);
  return result;
}

}  // namespace burstforge
