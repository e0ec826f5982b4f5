#pragma once

namespace caforge {

// Part of every report record and cache key. Bump on any change that can
// alter computed output.
inline constexpr const char* kEngineVersion = "0.1.0";

}  // namespace caforge
