#pragma once

#include "burstforge/image.hpp"
#include "burstforge/psf.hpp"

namespace burstforge {

enum class Boundary { kReflect, kZero };

// "Same"-size linear convolution of img with the PSF under the chosen
// boundary rule (kReflect mirrors the edge symmetrically, kZero pads with
// zeros). Output is clamped to [0, 1]. Throws DimensionError when the PSF
// support exceeds the image.
ImageF convolve_psf(const ImageF& img, const Psf& psf,
                    Boundary boundary = Boundary::kReflect);

// Same operation without the final clamp; the linear pre-clamp result.
ImageF convolve_psf_raw(const ImageF& img, const Psf& psf,
                        Boundary boundary = Boundary::kReflect);

}  // namespace burstforge
