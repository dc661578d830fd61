#pragma once

#include <cstddef>
#include <vector>

namespace burstforge {

// Floating-point image with 1 or 3 channels. Samples are stored planar and
// row-major: data[(c*height + y)*width + x]. Decoded images and the results
// of clamp-emitting operations hold samples in [0, 1]; intermediate results
// (raw inverse transforms, pre-clamp convolutions) may exceed that range.
struct ImageF {
  int height = 0;
  int width = 0;
  int channels = 1;
  std::vector<double> data;

  ImageF() = default;
  ImageF(int h, int w, int c, double fill = 0.0)
      : height(h), width(w), channels(c),
        data(static_cast<std::size_t>(h) * w * c, fill) {}

  double& at(int y, int x, int c = 0) {
    return data[(static_cast<std::size_t>(c) * height + y) * width + x];
  }
  double at(int y, int x, int c = 0) const {
    return data[(static_cast<std::size_t>(c) * height + y) * width + x];
  }

  std::size_t plane_size() const {
    return static_cast<std::size_t>(height) * width;
  }
  bool same_shape(const ImageF& other) const {
    return height == other.height && width == other.width &&
           channels == other.channels;
  }
};

// Single nonnegative plane (Fourier magnitudes, weight maps).
struct MagnitudeMap {
  int height = 0;
  int width = 0;
  std::vector<double> values;

  MagnitudeMap() = default;
  MagnitudeMap(int h, int w, double fill = 0.0)
      : height(h), width(w),
        values(static_cast<std::size_t>(h) * w, fill) {}

  double& at(int y, int x) {
    return values[static_cast<std::size_t>(y) * width + x];
  }
  double at(int y, int x) const {
    return values[static_cast<std::size_t>(y) * width + x];
  }
};

// Clamps every sample to [0, 1] in place / into a copy.
void clamp01(ImageF& img);
ImageF clamped01(ImageF img);

// Rec.601 luma (0.299 R + 0.587 G + 0.114 B); grayscale images pass through.
MagnitudeMap luma(const ImageF& img);

// Centered crop with sides at most `tile` pixels; returns the input when it
// already fits.
ImageF center_tile(const ImageF& img, int tile);

// Mirror index into [0, n) with symmetric reflection (edge repeated):
// -1 -> 0, -2 -> 1, n -> n-1, ...
int reflect_index(int i, int n);

}  // namespace burstforge
