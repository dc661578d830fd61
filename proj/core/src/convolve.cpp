#include "burstforge/convolve.hpp"

#include <cmath>

#include "burstforge/error.hpp"
#include "burstforge/fft.hpp"

namespace burstforge {

namespace {

// Boundary-extended copy: r extra pixels on every side, filled by symmetric
// reflection or zeros.
ImageF pad_boundary(const ImageF& img, int r, Boundary boundary) {
  ImageF out(img.height + 2 * r, img.width + 2 * r, img.channels);
  for (int c = 0; c < img.channels; ++c) {
    for (int y = 0; y < out.height; ++y) {
      const int sy = y - r;
      for (int x = 0; x < out.width; ++x) {
        const int sx = x - r;
        if (boundary == Boundary::kReflect) {
          out.at(y, x, c) =
              img.at(reflect_index(sy, img.height), reflect_index(sx, img.width), c);
        } else {
          const bool inside =
              sy >= 0 && sy < img.height && sx >= 0 && sx < img.width;
          out.at(y, x, c) = inside ? img.at(sy, sx, c) : 0.0;
        }
      }
    }
  }
  return out;
}

}  // namespace

ImageF convolve_psf_raw(const ImageF& img, const Psf& psf, Boundary boundary) {
  if (psf.size > img.height || psf.size > img.width)
    throw DimensionError("convolve_psf: PSF support exceeds the image");
  const int r = psf.center();
  const ImageF padded = pad_boundary(img, r, boundary);

  // Circular convolution on the padded extent; since the kernel support is
  // 2r+1 the "same"-size linear result is wrap-free at offset (2r, 2r).
  const Spectrum pad_spec = fft2(padded);
  ImageF kernel_plane(padded.height, padded.width, 1);
  for (int y = 0; y < psf.size; ++y)
    for (int x = 0; x < psf.size; ++x) kernel_plane.at(y, x) = psf.at(y, x);
  const Spectrum kernel_spec = fft2(kernel_plane);

  Spectrum product(padded.height, padded.width, padded.channels);
  const std::size_t plane =
      static_cast<std::size_t>(padded.height) * padded.width;
  for (int c = 0; c < padded.channels; ++c)
    for (std::size_t i = 0; i < plane; ++i)
      product.coeffs[c * plane + i] =
          pad_spec.coeffs[c * plane + i] * kernel_spec.coeffs[i];

  const ImageF full = ifft2_real(product);
  ImageF out(img.height, img.width, img.channels);
  for (int c = 0; c < img.channels; ++c)
    for (int y = 0; y < img.height; ++y)
      for (int x = 0; x < img.width; ++x)
        out.at(y, x, c) = full.at(y + 2 * r, x + 2 * r, c);
  return out;
}

ImageF convolve_psf(const ImageF& img, const Psf& psf, Boundary boundary) {
  return clamped01(convolve_psf_raw(img, psf, boundary));
}

}  // namespace burstforge
