#pragma once

namespace spinform {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace spinform
