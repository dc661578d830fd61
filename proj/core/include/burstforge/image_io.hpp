#pragma once

#include <string>

#include "burstforge/image.hpp"

namespace burstforge {

// Reads an 8-bit grayscale or RGB PNG. Integer sample k maps to k / 255.
// Palette images are expanded to RGB and alpha channels are stripped.
// Throws IoError for unreadable or corrupt files (message carries the path)
// and UnsupportedFormatError for 16-bit input.
ImageF load_image(const std::string& path);

// Writes an 8-bit PNG; samples are quantized by round(255 * clamp(v, 0, 1)).
void save_image(const ImageF& img, const std::string& path);

}  // namespace burstforge
