#pragma once

namespace degen {

inline constexpr const char* kToolName = "degen";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace degen
