#pragma once

namespace revival {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace revival
