#pragma once

namespace cde {

inline constexpr const char* version = "0.1.0";

}  // namespace cde
