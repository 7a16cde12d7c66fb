#pragma once

namespace catsim {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace catsim
