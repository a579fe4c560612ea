#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace riscorr::channel {

inline constexpr double kSpeedOfLightGhzM = 0.299792458;  // c / 1e9, meters*GHz

struct CarrierConfig {
  double frequency_ghz = 5.0;
  double bandwidth_hz = 1e6;

  double wavelength_m() const { return kSpeedOfLightGhzM / frequency_ghz; }
  /// Inter-element spacing, lambda/8.
  double spacing_m() const { return wavelength_m() / 8.0; }
};

/// Deployment geometry. Distances in meters, angles in degrees.
/// phi_ue_deg is the steering variable; the other angles are fixed per
/// deployment.
struct LinkGeometry {
  double d_bs_ue_m = 100.0;
  double d_bs_ris_m = 20.0;
  double d_ris_ue_m = 81.5;
  double alpha_deg = 20.0;
  double phi_bs_deg = -45.0;
  double theta_bs_deg = 60.0;
  double theta_ue_deg = 30.25;
  double phi_ue_deg = 0.0;
};

struct RicianParams {
  double kappa_bs_ris_db = 10.0;
  double kappa_ris_ue_db = 10.0;
  double kappa_bs_ue_db = 1.0;
};

struct ChannelVector {
  enum class Kind { LoS, NLoS, Mixed };
  std::vector<std::complex<double>> coefficients;
  Kind kind = Kind::LoS;

  std::size_t size() const { return coefficients.size(); }
};

/// 3GPP UMi-Street Canyon path loss. d_m >= 1 (model normalized by 1 m).
double path_loss_db(double d_m, double f_ghz);

/// Free-space path loss; distance in km, frequency in GHz.
double fspl_db(double d_km, double f_ghz);

/// Law-of-cosines RIS-UE distance from the BS-RIS/direct-link angle.
double ris_ue_distance(double d_bs_ue_m, double d_bs_ris_m, double alpha_deg);

/// Phase progression factor for the BS-RIS link,
/// cos(theta_ue - theta_bs) * sin(phi_ue - phi_bs) + sin(theta_ue - theta_bs).
double xi_bs_ris(const LinkGeometry& geom);

/// Phase progression factor for the RIS-UE link,
/// cos(theta_ue) * sin(phi_ue) + sin(theta_ue).
double xi_ris_ue(const LinkGeometry& geom);

ChannelVector los_vector_bs_ris(const LinkGeometry& geom,
                                const CarrierConfig& carrier, int n_total);

ChannelVector los_vector_ris_ue(const LinkGeometry& geom,
                                const CarrierConfig& carrier, int n_total);

/// Rician realization around a LoS vector; deterministic in (inputs, seed).
ChannelVector sample_rician(const ChannelVector& los, double kappa_db,
                            double pl_db, std::uint64_t seed);

/// Per-element channel power gain in linear scale, 10^(-pl_db/10).
double expected_power_gain(double pl_db);

}  // namespace riscorr::channel
