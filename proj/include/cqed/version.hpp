#pragma once

namespace cqed {

inline constexpr const char* kToolName = "cqed";
inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace cqed
