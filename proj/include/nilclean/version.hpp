#pragma once

namespace nilclean {

inline constexpr const char* kToolName = "nilclean";
inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kToolString = "nilclean 1.0.0";

}  // namespace nilclean
