#pragma once

namespace xychain {

// Bumped whenever a change can alter any computed number; cache entries
// written under a different tag are never reused.
inline constexpr const char* kCodeVersion = "xy-1";

}  // namespace xychain
