#include "burstforge/burst.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "burstforge/convolve.hpp"
#include "burstforge/error.hpp"
#include "burstforge/image_io.hpp"
#include "burstforge/parallel.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace burstforge {

namespace {

constexpr int kMaxRetries = 10;
constexpr double kZetaTieEps = 1e-9;

std::string frame_name(std::size_t i) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "frame_%03zu.png", i);
  return buf;
}

std::string kernel_name(std::size_t i) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "kernel_%03zu.psf", i);
  return buf;
}

}  // namespace

void save_manifest(const BurstManifest& manifest, const std::string& path) {
  json frames = json::array();
  for (const auto& f : manifest.frames) {
    frames.push_back({{"path", f.path},
                      {"kernel_path", f.kernel_path},
                      {"zeta", f.zeta},
                      {"shift", {f.shift[0], f.shift[1]}}});
  }
  const json doc = {{"sharp_ref", manifest.sharp_ref},
                    {"zeta_sigma", manifest.zeta_sigma},
                    {"rng_seed", manifest.rng_seed},
                    {"frames", frames}};
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << doc.dump(2) << "\n";
  if (!out) throw IoError("write failed: " + path);
}

BurstManifest load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open manifest: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw UnsupportedFormatError("bad manifest " + path + ": " + e.what());
  }
  BurstManifest manifest;
  try {
    manifest.sharp_ref = doc.at("sharp_ref").get<std::string>();
    manifest.zeta_sigma = doc.at("zeta_sigma").get<double>();
    manifest.rng_seed = doc.at("rng_seed").get<std::uint64_t>();
    for (const auto& f : doc.at("frames")) {
      ManifestFrame mf;
      mf.path = f.at("path").get<std::string>();
      mf.kernel_path = f.at("kernel_path").get<std::string>();
      mf.zeta = f.at("zeta").get<double>();
      mf.shift = {f.at("shift")[0].get<int>(), f.at("shift")[1].get<int>()};
      manifest.frames.push_back(std::move(mf));
    }
  } catch (const json::exception& e) {
    throw UnsupportedFormatError("bad manifest " + path + ": " + e.what());
  }
  return manifest;
}

LoadedBurst load_burst(const std::string& path) {
  LoadedBurst burst;
  fs::path manifest_path;
  if (fs::is_directory(path)) {
    manifest_path = fs::path(path) / "manifest.json";
    burst.dir = path;
    if (!fs::exists(manifest_path)) {
      // Bare directory of frames, no ground truth.
      std::vector<fs::path> pngs;
      for (const auto& entry : fs::directory_iterator(path))
        if (entry.path().extension() == ".png") pngs.push_back(entry.path());
      std::sort(pngs.begin(), pngs.end());
      if (pngs.empty()) throw IoError("no manifest.json or *.png in " + path);
      for (std::size_t i = 0; i < pngs.size(); ++i) {
        Frame frame;
        frame.image = load_image(pngs[i].string());
        frame.index = i;
        burst.frames.push_back(std::move(frame));
        burst.manifest.frames.push_back(
            {fs::relative(pngs[i], path).string(), "", 0.0, {0, 0}});
      }
      return burst;
    }
  } else {
    manifest_path = path;
    burst.dir = fs::path(path).parent_path().string();
  }

  burst.manifest = load_manifest(manifest_path.string());
  burst.frames.resize(burst.manifest.frames.size());
  parallel_for(burst.manifest.frames.size(), [&](std::size_t i) {
    const auto& mf = burst.manifest.frames[i];
    Frame frame;
    frame.image = load_image((fs::path(burst.dir) / mf.path).string());
    frame.zeta = mf.zeta;
    frame.index = i;
    burst.frames[i] = std::move(frame);
  });
  return burst;
}

std::vector<SynthFrame> make_burst_frames(const ImageF& sharp,
                                          const SynthParams& params,
                                          std::uint64_t seed) {
  if (params.n_frames < 1)
    throw ParameterError("make_burst_frames: n_frames must be >= 1");
  if (params.canvas < 1 || params.canvas % 2 == 0)
    throw ParameterError("make_burst_frames: canvas must be odd");
  if (sharp.height <= params.canvas || sharp.width <= params.canvas)
    throw DimensionError("make_burst_frames: sharp image must exceed the " +
                         std::to_string(params.canvas) + "px kernel canvas");
  if (params.m_min < 0.0 || params.m_max < params.m_min)
    throw ParameterError("make_burst_frames: bad path-length range");

  // Kernels are drawn sequentially so the tie check sees earlier zetas;
  // the expensive convolutions then run in parallel.
  std::vector<SynthFrame> frames(params.n_frames);
  std::vector<double> zetas;
  for (int i = 0; i < params.n_frames; ++i) {
    RandomSource rng(split_seed(seed, static_cast<std::uint64_t>(i)));
    bool placed = false;
    for (int attempt = 0; attempt < kMaxRetries && !placed; ++attempt) {
      TrajectoryParams tp = params.trajectory;
      tp.target_length = rng.uniform(params.m_min, params.m_max);
      const Trajectory traj = gen_trajectory(tp, rng);
      Psf psf;
      try {
        psf = rasterize_psf(traj, params.canvas);
      } catch (const OutOfSupportError&) {
        continue;  // walk left the canvas, redraw
      }
      const double z = zeta(psf, params.zeta_sigma);
      const bool tied = std::any_of(zetas.begin(), zetas.end(), [&](double u) {
        return std::abs(u - z) < kZetaTieEps;
      });
      if (tied) continue;  // keep ground-truth zetas distinct
      frames[i].psf = std::move(psf);
      frames[i].zeta = z;
      zetas.push_back(z);
      placed = true;
    }
    if (!placed)
      throw OutOfSupportError(
          "make_burst_frames: no in-canvas, untied kernel after " +
          std::to_string(kMaxRetries) + " retries (frame " +
          std::to_string(i) + ")");
  }

  parallel_for(frames.size(), [&](std::size_t i) {
    frames[i].image = convolve_psf(sharp, frames[i].psf, Boundary::kReflect);
  });
  return frames;
}

BurstManifest synth_burst(const ImageF& sharp, const SynthParams& params,
                          std::uint64_t seed, const std::string& out_dir,
                          const std::string& sharp_ref_name) {
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create " + out_dir + ": " + ec.message());

  const auto frames = make_burst_frames(sharp, params, seed);

  BurstManifest manifest;
  manifest.sharp_ref = sharp_ref_name;
  manifest.zeta_sigma = params.zeta_sigma;
  manifest.rng_seed = seed;
  save_image(sharp, (fs::path(out_dir) / sharp_ref_name).string());
  for (std::size_t i = 0; i < frames.size(); ++i) {
    const std::string fname = frame_name(i);
    const std::string kname = kernel_name(i);
    save_image(frames[i].image, (fs::path(out_dir) / fname).string());
    save_psf(frames[i].psf, (fs::path(out_dir) / kname).string());
    manifest.frames.push_back({fname, kname, frames[i].zeta, {0, 0}});
  }
  save_manifest(manifest, (fs::path(out_dir) / "manifest.json").string());
  return manifest;
}

ImageF translate(const ImageF& img, int dx, int dy) {
  ImageF out(img.height, img.width, img.channels);
  for (int c = 0; c < img.channels; ++c)
    for (int y = 0; y < img.height; ++y)
      for (int x = 0; x < img.width; ++x)
        out.at(y, x, c) = img.at(reflect_index(y - dy, img.height),
                                 reflect_index(x - dx, img.width), c);
  return out;
}

BurstManifest shift_frames(const BurstManifest& manifest,
                           const std::string& dir, double fraction,
                           int max_shift, RandomSource& rng) {
  if (fraction < 0.0 || fraction > 1.0)
    throw ParameterError("shift_frames: fraction must be in [0, 1]");
  if (max_shift < 0)
    throw ParameterError("shift_frames: max_shift must be >= 0");

  const std::size_t n = manifest.frames.size();
  const std::size_t count =
      static_cast<std::size_t>(std::lround(fraction * static_cast<double>(n)));
  BurstManifest shifted = manifest;
  if (count == 0) return shifted;
  if (max_shift == 0)
    throw ParameterError("shift_frames: nonzero fraction needs max_shift > 0");

  // Partial Fisher-Yates picks `count` distinct frames.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = static_cast<std::size_t>(
        rng.uniform_int(static_cast<std::int64_t>(i),
                        static_cast<std::int64_t>(n - 1)));
    std::swap(order[i], order[j]);
  }

  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t idx = order[i];
    int dx = 0, dy = 0;
    do {
      dx = static_cast<int>(rng.uniform_int(-max_shift, max_shift));
      dy = static_cast<int>(rng.uniform_int(-max_shift, max_shift));
    } while (dx == 0 && dy == 0);
    const fs::path frame_path =
        fs::path(dir) / shifted.frames[idx].path;
    const ImageF moved = translate(load_image(frame_path.string()), dx, dy);
    save_image(moved, frame_path.string());
    shifted.frames[idx].shift = {dx, dy};
  }
  save_manifest(shifted, (fs::path(dir) / "manifest.json").string());
  return shifted;
}

}  // namespace burstforge
