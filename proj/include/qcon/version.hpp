#pragma once

namespace qcon {
inline constexpr const char* kToolName = "qcon";
inline constexpr const char* kVersion = "0.1.0";
}  // namespace qcon
