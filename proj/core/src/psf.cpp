#include "burstforge/psf.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "burstforge/error.hpp"

namespace burstforge {

Psf Psf::delta(int k) {
  Psf psf(k);
  psf.at(psf.center(), psf.center()) = 1.0;
  return psf;
}

double Psf::sum() const {
  double total = 0.0;
  for (double w : weights) total += w;
  return total;
}

Psf rasterize_psf(const Trajectory& traj, int size) {
  if (size < 1 || size % 2 == 0)
    throw ParameterError("rasterize_psf: size must be odd and positive");
  if (traj.points.empty())
    throw ParameterError("rasterize_psf: empty trajectory");

  Psf psf(size);
  const double c = psf.center();
  for (const Vec2& p : traj.points) {
    const double gx = c + p.x;
    const double gy = c + p.y;
    const int x0 = static_cast<int>(std::floor(gx));
    const int y0 = static_cast<int>(std::floor(gy));
    const double fx = gx - x0;
    const double fy = gy - y0;
    // All four bilinear neighbors must exist, except that a zero fractional
    // part collapses the pair onto a single cell.
    const int x1 = fx > 0.0 ? x0 + 1 : x0;
    const int y1 = fy > 0.0 ? y0 + 1 : y0;
    if (x0 < 0 || y0 < 0 || x1 >= size || y1 >= size) {
      std::ostringstream msg;
      msg << "rasterize_psf: trajectory point (" << p.x << ", " << p.y
          << ") falls outside the " << size << "x" << size << " grid";
      throw OutOfSupportError(msg.str());
    }
    psf.at(y0, x0) += (1.0 - fy) * (1.0 - fx);
    if (x1 != x0) psf.at(y0, x1) += (1.0 - fy) * fx;
    if (y1 != y0) psf.at(y1, x0) += fy * (1.0 - fx);
    if (x1 != x0 && y1 != y0) psf.at(y1, x1) += fy * fx;
  }

  const double total = psf.sum();
  if (total <= 0.0) throw ParameterError("rasterize_psf: zero-mass kernel");
  for (double& w : psf.weights) w /= total;
  return psf;
}

double zeta(const Psf& psf, double sigma) {
  if (sigma <= 0.0) throw ParameterError("zeta: sigma must be positive");
  const int c = psf.center();
  const double inv = 1.0 / (2.0 * sigma * sigma);
  // Kahan summation keeps the discrete sum reproducible against independent
  // high-precision evaluation.
  double sum = 0.0;
  double comp = 0.0;
  for (int y = 0; y < psf.size; ++y) {
    const double k2 = static_cast<double>(y - c);
    for (int x = 0; x < psf.size; ++x) {
      const double k1 = static_cast<double>(x - c);
      const double term =
          psf.at(y, x) * (1.0 - std::exp(-(k1 * k1 + k2 * k2) * inv));
      const double t = term - comp;
      const double next = sum + t;
      comp = (next - sum) - t;
      sum = next;
    }
  }
  return 100.0 * sum;
}

KernelDescriptors kernel_descriptors(const Trajectory& traj, const Psf& psf) {
  if (traj.points.empty())
    throw ParameterError("kernel_descriptors: empty trajectory");

  // Population covariance of the trajectory points.
  const double n = static_cast<double>(traj.points.size());
  double mx = 0.0, my = 0.0;
  for (const Vec2& p : traj.points) {
    mx += p.x;
    my += p.y;
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (const Vec2& p : traj.points) {
    const double dx = p.x - mx;
    const double dy = p.y - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  sxx /= n;
  syy /= n;
  sxy /= n;

  const double trace = sxx + syy;
  const double det = sxx * syy - sxy * sxy;
  const double disc = std::sqrt(std::max(0.0, trace * trace - 4.0 * det));

  KernelDescriptors d;
  d.c_large = 0.5 * (trace + disc);
  d.c_small = std::max(0.0, 0.5 * (trace - disc));
  d.hm = d.c_large + d.c_small > 0.0
             ? d.c_large * d.c_small / (d.c_large + d.c_small)
             : 0.0;
  d.m = traj.length;
  d.zeta = zeta(psf);
  return d;
}

void save_psf(const Psf& psf, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << "PSF " << psf.size << " " << psf.size << "\n";
  char buf[40];
  for (int y = 0; y < psf.size; ++y) {
    for (int x = 0; x < psf.size; ++x) {
      std::snprintf(buf, sizeof buf, "%.17g", psf.at(y, x));
      out << buf << (x + 1 == psf.size ? "\n" : " ");
    }
  }
  if (!out) throw IoError("write failed: " + path);
}

Psf load_psf(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open kernel: " + path);
  std::string tag;
  int rows = 0, cols = 0;
  in >> tag >> rows >> cols;
  if (!in || tag != "PSF" || rows != cols || rows < 1 || rows % 2 == 0)
    throw UnsupportedFormatError("bad PSF header: " + path);
  Psf psf(rows);
  for (double& w : psf.weights) {
    in >> w;
    if (!in) throw IoError("truncated PSF file: " + path);
  }
  return psf;
}

}  // namespace burstforge
