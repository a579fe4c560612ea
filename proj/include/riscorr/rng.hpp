#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace riscorr {

/// Seedable generator with portable normal/complex-normal draws.
///
/// std::mt19937_64 output is fully specified by the standard and the
/// Gaussian transform is done here by Box-Muller, so a given seed yields
/// the same stream on every platform (std::normal_distribution does not
/// guarantee that).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform01() {
    // 53-bit mantissa draw in (0, 1]; never returns 0 so log() is safe.
    return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
  }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  /// Circularly symmetric complex normal, zero mean, unit total variance.
  std::complex<double> complex_normal() {
    const double s = std::sqrt(0.5);
    const double re = normal();
    const double im = normal();
    return {s * re, s * im};
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace riscorr
