#include "burstforge/image.hpp"

#include <algorithm>

#include "burstforge/error.hpp"

namespace burstforge {

void clamp01(ImageF& img) {
  for (double& v : img.data) v = std::clamp(v, 0.0, 1.0);
}

ImageF clamped01(ImageF img) {
  clamp01(img);
  return img;
}

MagnitudeMap luma(const ImageF& img) {
  MagnitudeMap out(img.height, img.width);
  if (img.channels == 1) {
    std::copy(img.data.begin(), img.data.end(), out.values.begin());
    return out;
  }
  if (img.channels != 3) {
    throw DimensionError("luma: expected 1 or 3 channels, got " +
                         std::to_string(img.channels));
  }
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      out.at(y, x) = 0.299 * img.at(y, x, 0) + 0.587 * img.at(y, x, 1) +
                     0.114 * img.at(y, x, 2);
    }
  }
  return out;
}

ImageF center_tile(const ImageF& img, int tile) {
  if (tile <= 0) throw ParameterError("center_tile: tile must be positive");
  const int h = std::min(img.height, tile);
  const int w = std::min(img.width, tile);
  if (h == img.height && w == img.width) return img;
  const int y0 = (img.height - h) / 2;
  const int x0 = (img.width - w) / 2;
  ImageF out(h, w, img.channels);
  for (int c = 0; c < img.channels; ++c)
    for (int y = 0; y < h; ++y)
      for (int x = 0; x < w; ++x) out.at(y, x, c) = img.at(y0 + y, x0 + x, c);
  return out;
}

int reflect_index(int i, int n) {
  if (n == 1) return 0;
  const int period = 2 * n;
  int m = i % period;
  if (m < 0) m += period;
  return m < n ? m : period - 1 - m;
}

}  // namespace burstforge
