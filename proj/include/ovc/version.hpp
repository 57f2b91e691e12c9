#pragma once

namespace ovc {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ovc
