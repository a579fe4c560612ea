#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "riscorr/channel.hpp"
#include "riscorr/sizing.hpp"
#include "riscorr/steering.hpp"

namespace riscorr::rate {

/// One design entry for a rate sweep. Connected designs share each column's
/// first-row phase across the column.
struct DesignSpec {
  std::string name;
  sizing::RisDimensions dims;
  bool connected = false;
};

struct RateCurve {
  std::string design;
  std::vector<double> p_t_dbm;
  std::vector<double> rate_bps;  // Monte-Carlo mean per grid point
  int n_realizations = 0;
  std::uint64_t seed = 0;
};

/// Thermal noise floor, -174 + 10*log10(B) dBm.
double noise_power_dbm(double bandwidth_hz);

/// Linear SNR of the cascade BS -> RIS -> UE under reflection phases psi.
double cascade_snr(double p_t_dbm, const channel::ChannelVector& h_bs_ris,
                   const steering::PhaseShiftMatrix& psi,
                   const channel::ChannelVector& h_ris_ue, double n0_dbm);

/// Shannon rate B*log2(1 + snr), bits/s.
double achievable_rate(double snr, double bandwidth_hz);

/// Monte-Carlo mean achievable rate over a transmit-power grid, one curve per
/// design. Codewords are designed from the deterministic planar responses at
/// the scenario's UE azimuth and held fixed across fading realizations.
/// Deterministic in (scenario, designs, grid, n_realizations, seed); the
/// RISCORR_THREADS environment variable caps worker threads.
std::vector<RateCurve> rate_sweep(const ScenarioConfig& scenario,
                                  const std::vector<DesignSpec>& designs,
                                  const std::vector<double>& p_t_grid_dbm,
                                  int n_realizations, std::uint64_t seed);

}  // namespace riscorr::rate
