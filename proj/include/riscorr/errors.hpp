#pragma once

#include <stdexcept>
#include <string>

namespace riscorr {

/// Configuration file problems (missing fields, range or key violations).
struct config_error : std::runtime_error {
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

/// A resource cap was exceeded (e.g. all-pairs correlation element cap).
struct cap_exceeded_error : std::runtime_error {
  explicit cap_exceeded_error(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace riscorr
