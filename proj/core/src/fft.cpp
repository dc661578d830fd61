#include "burstforge/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

#include "burstforge/error.hpp"

namespace burstforge {

namespace {

// FFTW plan creation is not thread-safe; execution through the new-array
// interface is. Plans are cached per (h, w, sign) with FFTW_UNALIGNED so the
// new-array execute accepts arbitrarily aligned vectors.
class PlanCache {
 public:
  static PlanCache& instance() {
    static PlanCache cache;
    return cache;
  }

  void execute(int h, int w, int sign, const std::complex<double>* in,
               std::complex<double>* out) {
    fftw_plan plan;
    {
      std::lock_guard<std::mutex> lock(mutex_);
      const Key key{h, w, sign};
      auto it = plans_.find(key);
      if (it == plans_.end()) {
        std::vector<std::complex<double>> a(std::size_t(h) * w);
        std::vector<std::complex<double>> b(std::size_t(h) * w);
        plan = fftw_plan_dft_2d(
            h, w, reinterpret_cast<fftw_complex*>(a.data()),
            reinterpret_cast<fftw_complex*>(b.data()), sign,
            FFTW_ESTIMATE | FFTW_UNALIGNED);
        plans_.emplace(key, plan);
      } else {
        plan = it->second;
      }
    }
    fftw_execute_dft(
        plan,
        reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in)),
        reinterpret_cast<fftw_complex*>(out));
  }

 private:
  using Key = std::tuple<int, int, int>;
  std::mutex mutex_;
  std::map<Key, fftw_plan> plans_;
};

void check_dims(int h, int w) {
  if (h < 1 || w < 1) throw DimensionError("fft2: dimensions must be >= 1");
}

}  // namespace

Spectrum fft2(const ImageF& img) {
  check_dims(img.height, img.width);
  Spectrum spec(img.height, img.width, img.channels);
  const std::size_t plane = img.plane_size();
  std::vector<std::complex<double>> in(plane);
  for (int c = 0; c < img.channels; ++c) {
    for (std::size_t i = 0; i < plane; ++i)
      in[i] = std::complex<double>(img.data[c * plane + i], 0.0);
    PlanCache::instance().execute(img.height, img.width, FFTW_FORWARD,
                                  in.data(), spec.coeffs.data() + c * plane);
  }
  return spec;
}

Spectrum ifft2_complex(const Spectrum& spec) {
  check_dims(spec.height, spec.width);
  Spectrum out(spec.height, spec.width, spec.channels);
  const std::size_t plane =
      static_cast<std::size_t>(spec.height) * spec.width;
  const double scale = 1.0 / static_cast<double>(plane);
  for (int c = 0; c < spec.channels; ++c) {
    PlanCache::instance().execute(spec.height, spec.width, FFTW_BACKWARD,
                                  spec.coeffs.data() + c * plane,
                                  out.coeffs.data() + c * plane);
  }
  for (auto& v : out.coeffs) v *= scale;
  return out;
}

ImageF ifft2_real(const Spectrum& spec, double* max_imag) {
  const Spectrum full = ifft2_complex(spec);
  ImageF img(spec.height, spec.width, spec.channels);
  double worst = 0.0;
  for (std::size_t i = 0; i < full.coeffs.size(); ++i) {
    img.data[i] = full.coeffs[i].real();
    worst = std::max(worst, std::abs(full.coeffs[i].imag()));
  }
  if (max_imag) *max_imag = worst;
  return img;
}

ImageF ifft2(const Spectrum& spec) { return clamped01(ifft2_real(spec)); }

}  // namespace burstforge
