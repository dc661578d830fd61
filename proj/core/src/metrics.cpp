#include "burstforge/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "burstforge/error.hpp"

namespace burstforge {

namespace {

constexpr int kWindow = 11;
constexpr int kRadius = kWindow / 2;
constexpr double kWindowSigma = 1.5;
constexpr double kC1 = 0.01 * 0.01;
constexpr double kC2 = 0.03 * 0.03;

std::vector<double> window_taps() {
  std::vector<double> taps(kWindow);
  double total = 0.0;
  for (int i = -kRadius; i <= kRadius; ++i) {
    taps[i + kRadius] = std::exp(-(i * i) / (2.0 * kWindowSigma * kWindowSigma));
    total += taps[i + kRadius];
  }
  for (double& t : taps) t /= total;
  return taps;
}

// Separable weighted filtering; only values at fully covered pixels are used
// afterwards, so the boundary rule is irrelevant there.
std::vector<double> filter_plane(const std::vector<double>& plane, int h,
                                 int w, const std::vector<double>& taps) {
  std::vector<double> rows(plane.size());
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double acc = 0.0;
      for (int t = -kRadius; t <= kRadius; ++t) {
        const int sx = reflect_index(x + t, w);
        acc += taps[t + kRadius] * plane[static_cast<std::size_t>(y) * w + sx];
      }
      rows[static_cast<std::size_t>(y) * w + x] = acc;
    }
  }
  std::vector<double> out(plane.size());
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double acc = 0.0;
      for (int t = -kRadius; t <= kRadius; ++t) {
        const int sy = reflect_index(y + t, h);
        acc += taps[t + kRadius] * rows[static_cast<std::size_t>(sy) * w + x];
      }
      out[static_cast<std::size_t>(y) * w + x] = acc;
    }
  }
  return out;
}

double ssim_channel(const ImageF& ref, const ImageF& img, int c,
                    const std::vector<double>& taps) {
  const int h = ref.height;
  const int w = ref.width;
  const std::size_t plane = ref.plane_size();
  std::vector<double> x(plane), y(plane), xx(plane), yy(plane), xy(plane);
  for (std::size_t i = 0; i < plane; ++i) {
    const double a = ref.data[c * plane + i];
    const double b = img.data[c * plane + i];
    x[i] = a;
    y[i] = b;
    xx[i] = a * a;
    yy[i] = b * b;
    xy[i] = a * b;
  }
  const auto mu_x = filter_plane(x, h, w, taps);
  const auto mu_y = filter_plane(y, h, w, taps);
  const auto m_xx = filter_plane(xx, h, w, taps);
  const auto m_yy = filter_plane(yy, h, w, taps);
  const auto m_xy = filter_plane(xy, h, w, taps);

  // Mean SSIM over windows that fit entirely inside the image; for images
  // smaller than the window fall back to every pixel.
  int y0 = kRadius, y1 = h - kRadius, x0 = kRadius, x1 = w - kRadius;
  if (y0 >= y1 || x0 >= x1) {
    y0 = 0;
    y1 = h;
    x0 = 0;
    x1 = w;
  }
  double total = 0.0;
  std::size_t count = 0;
  for (int yy_ = y0; yy_ < y1; ++yy_) {
    for (int xx_ = x0; xx_ < x1; ++xx_) {
      const std::size_t i = static_cast<std::size_t>(yy_) * w + xx_;
      const double mx = mu_x[i];
      const double my = mu_y[i];
      const double vx = m_xx[i] - mx * mx;
      const double vy = m_yy[i] - my * my;
      const double cov = m_xy[i] - mx * my;
      const double num = (2.0 * mx * my + kC1) * (2.0 * cov + kC2);
      const double den = (mx * mx + my * my + kC1) * (vx + vy + kC2);
      total += num / den;
      ++count;
    }
  }
  return total / static_cast<double>(count);
}

}  // namespace

QualityReport quality(const ImageF& ref, const ImageF& img) {
  if (!ref.same_shape(img))
    throw DimensionError("quality: image shapes differ");

  QualityReport report;
  double sum_sq = 0.0;
  for (std::size_t i = 0; i < ref.data.size(); ++i) {
    const double d = ref.data[i] - img.data[i];
    sum_sq += d * d;
  }
  report.mse = sum_sq / static_cast<double>(ref.data.size());
  report.psnr_db = 10.0 * std::log10(1.0 / std::max(report.mse, 1e-12));

  const auto taps = window_taps();
  double ssim_total = 0.0;
  for (int c = 0; c < ref.channels; ++c)
    ssim_total += ssim_channel(ref, img, c, taps);
  report.ssim = ssim_total / ref.channels;
  return report;
}

}  // namespace burstforge
