#pragma once

namespace orthozeros {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace orthozeros
