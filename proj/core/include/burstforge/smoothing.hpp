#pragma once

#include "burstforge/image.hpp"

namespace burstforge {

// Separable Gaussian filter with a normalized sampled kernel of radius
// ceil(3 * sigma_s) and symmetric-reflect boundary. sigma_s == 0 is the
// identity; negative sigma_s is a ParameterError.
MagnitudeMap gaussian_smooth(const MagnitudeMap& map, double sigma_s);

}  // namespace burstforge
