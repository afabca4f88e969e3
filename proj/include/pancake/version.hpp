#pragma once

namespace pancake {

inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace pancake
