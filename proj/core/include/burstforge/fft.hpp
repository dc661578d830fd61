#pragma once

#include <complex>
#include <vector>

#include "burstforge/image.hpp"

namespace burstforge {

// Full-plane 2-D spectrum, one complex plane per channel, stored planar and
// row-major like ImageF with the DC coefficient at (0, 0). Convention:
// forward transform unnormalized, inverse scaled by 1 / (height * width).
struct Spectrum {
  int height = 0;
  int width = 0;
  int channels = 1;
  std::vector<std::complex<double>> coeffs;

  Spectrum() = default;
  Spectrum(int h, int w, int c)
      : height(h), width(w), channels(c),
        coeffs(static_cast<std::size_t>(h) * w * c) {}

  std::complex<double>& at(int y, int x, int c = 0) {
    return coeffs[(static_cast<std::size_t>(c) * height + y) * width + x];
  }
  std::complex<double> at(int y, int x, int c = 0) const {
    return coeffs[(static_cast<std::size_t>(c) * height + y) * width + x];
  }
};

// Forward DFT of every channel. No implicit padding; callers pad.
Spectrum fft2(const ImageF& img);

// Inverse DFT, real part, clamped to [0, 1].
ImageF ifft2(const Spectrum& spec);

// Inverse DFT, real part without clamping. When max_imag is non-null the
// largest |imaginary| residual (after the 1/(h*w) scaling) is stored there.
ImageF ifft2_real(const Spectrum& spec, double* max_imag = nullptr);

// Raw complex inverse (scaled by 1/(h*w)); used where the full complex
// result matters.
Spectrum ifft2_complex(const Spectrum& spec);

}  // namespace burstforge
