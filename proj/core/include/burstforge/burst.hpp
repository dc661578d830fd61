#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "burstforge/image.hpp"
#include "burstforge/psf.hpp"
#include "burstforge/random.hpp"
#include "burstforge/trajectory.hpp"

namespace burstforge {

// A burst frame as comparators see it: pixels plus optional ground truth.
struct Frame {
  ImageF image;
  std::optional<double> zeta;
  std::optional<std::size_t> index;
};

struct ManifestFrame {
  std::string path;         // relative to the manifest directory
  std::string kernel_path;  // relative to the manifest directory
  double zeta = 0.0;
  std::array<int, 2> shift{0, 0};  // (dx, dy) applied after synthesis
};

// On-disk description of a synthetic burst; serialized as manifest.json.
struct BurstManifest {
  std::string sharp_ref;
  double zeta_sigma = 32.0;
  std::uint64_t rng_seed = 0;
  std::vector<ManifestFrame> frames;
};

void save_manifest(const BurstManifest& manifest, const std::string& path);
BurstManifest load_manifest(const std::string& path);

// Burst loaded back into memory; frames carry their manifest zeta and index.
struct LoadedBurst {
  BurstManifest manifest;
  std::string dir;
  std::vector<Frame> frames;
};

// Accepts either a burst directory (containing manifest.json, or bare *.png
// frames without ground truth) or a direct path to a manifest file.
LoadedBurst load_burst(const std::string& path);

struct SynthParams {
  int n_frames = 8;
  double m_min = 3.0;   // per-frame path length drawn uniformly from
  double m_max = 19.0;  // [m_min, m_max]
  int canvas = 63;      // odd PSF grid size
  double zeta_sigma = 32.0;
  TrajectoryParams trajectory;  // target_length is overwritten per frame
};

// One synthesized frame before any disk I/O.
struct SynthFrame {
  ImageF image;
  Psf psf;
  double zeta = 0.0;
};

// Draws an independent trajectory/PSF per frame (seed_i = seed ^ i), blurs
// the sharp image and scores each kernel. Trajectories that leave the canvas
// or tie an earlier frame's zeta are redrawn, up to 10 retries each.
std::vector<SynthFrame> make_burst_frames(const ImageF& sharp,
                                          const SynthParams& params,
                                          std::uint64_t seed);

// make_burst_frames plus persistence: frames as PNG, kernels as text PSF
// files and manifest.json under out_dir. Returns the written manifest.
BurstManifest synth_burst(const ImageF& sharp, const SynthParams& params,
                          std::uint64_t seed, const std::string& out_dir,
                          const std::string& sharp_ref_name = "sharp.png");

// Translates round(fraction * n) randomly chosen frames by nonzero integer
// offsets drawn uniformly from [-max_shift, max_shift]^2 (reflect fill),
// rewrites the affected PNGs and records the shifts in the manifest.
BurstManifest shift_frames(const BurstManifest& manifest,
                           const std::string& dir, double fraction,
                           int max_shift, RandomSource& rng);

// Integer translation with symmetric-reflect fill; out(y, x) = in(y-dy, x-dx).
ImageF translate(const ImageF& img, int dx, int dy);

}  // namespace burstforge
