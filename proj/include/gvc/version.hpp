#pragma once

namespace gvc {

inline constexpr const char* kToolName = "gvc-atlas";
inline constexpr const char* kToolVersion = "1.0.0";

} // namespace gvc
