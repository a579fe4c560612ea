#pragma once

namespace riscorr {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace riscorr
