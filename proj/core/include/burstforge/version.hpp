#pragma once

namespace burstforge {

inline constexpr const char* kVersion = "burstforge 0.1.0";

}  // namespace burstforge
