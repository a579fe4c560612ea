#include "riscorr/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "riscorr/rng.hpp"

namespace riscorr::channel {

namespace {
constexpr double kDegToRad = M_PI / 180.0;
}

double path_loss_db(double d_m, double f_ghz) {
  if (d_m < 1.0) {
    throw std::domain_error("path_loss_db: distance below 1 m");
  }
  if (f_ghz <= 0.0) {
    throw std::domain_error("path_loss_db: frequency must be positive");
  }
  return 32.4 + 21.0 * std::log10(d_m) + 20.0 * std::log10(f_ghz);
}

double fspl_db(double d_km, double f_ghz) {
  if (d_km <= 0.0 || f_ghz <= 0.0) {
    throw std::domain_error("fspl_db: inputs must be positive");
  }
  return 92.45 + 20.0 * std::log10(d_km) + 20.0 * std::log10(f_ghz);
}

double ris_ue_distance(double d_bs_ue_m, double d_bs_ris_m, double alpha_deg) {
  if (d_bs_ue_m <= 0.0 || d_bs_ris_m <= 0.0) {
    throw std::domain_error("ris_ue_distance: distances must be positive");
  }
  if (alpha_deg < 0.0 || alpha_deg > 180.0) {
    throw std::domain_error("ris_ue_distance: alpha outside [0, 180] deg");
  }
  const double c = std::cos(alpha_deg * kDegToRad);
  const double sq = d_bs_ue_m * d_bs_ue_m + d_bs_ris_m * d_bs_ris_m -
                    2.0 * d_bs_ue_m * d_bs_ris_m * c;
  return std::sqrt(std::max(sq, 0.0));
}

double xi_bs_ris(const LinkGeometry& geom) {
  const double dt = (geom.theta_ue_deg - geom.theta_bs_deg) * kDegToRad;
  const double dp = (geom.phi_ue_deg - geom.phi_bs_deg) * kDegToRad;
  return std::cos(dt) * std::sin(dp) + std::sin(dt);
}

double xi_ris_ue(const LinkGeometry& geom) {
  const double t = geom.theta_ue_deg * kDegToRad;
  const double p = geom.phi_ue_deg * kDegToRad;
  return std::cos(t) * std::sin(p) + std::sin(t);
}

namespace {

ChannelVector los_progression(double xi, int n_total) {
  if (n_total < 1) {
    throw std::domain_error("los vector: element count must be >= 1");
  }
  ChannelVector out;
  out.kind = ChannelVector::Kind::LoS;
  out.coefficients.resize(static_cast<std::size_t>(n_total));
  // delta1 = lambda/8, so 2*pi*delta1/lambda reduces to pi/4.
  const double step = (M_PI / 4.0) * xi;
  for (int k = 0; k < n_total; ++k) {
    out.coefficients[static_cast<std::size_t>(k)] =
        std::polar(1.0, step * static_cast<double>(k));
  }
  return out;
}

}  // namespace

ChannelVector los_vector_bs_ris(const LinkGeometry& geom,
                                const CarrierConfig& /*carrier*/, int n_total) {
  return los_progression(xi_bs_ris(geom), n_total);
}

ChannelVector los_vector_ris_ue(const LinkGeometry& geom,
                                const CarrierConfig& /*carrier*/, int n_total) {
  return los_progression(xi_ris_ue(geom), n_total);
}

ChannelVector sample_rician(const ChannelVector& los, double kappa_db,
                            double pl_db, std::uint64_t seed) {
  if (los.kind != ChannelVector::Kind::LoS) {
    throw std::invalid_argument("sample_rician: expected a LoS-kind vector");
  }
  const double kappa = std::pow(10.0, kappa_db / 10.0);
  const double los_w = std::sqrt(kappa / (kappa + 1.0));
  const double nlos_w = std::sqrt(1.0 / (kappa + 1.0));
  const double amp = std::sqrt(expected_power_gain(pl_db));

  Rng rng(seed);
  ChannelVector out;
  out.kind = ChannelVector::Kind::Mixed;
  out.coefficients.resize(los.size());
  for (std::size_t k = 0; k < los.size(); ++k) {
    out.coefficients[k] =
        amp * (los_w * los.coefficients[k] + nlos_w * rng.complex_normal());
  }
  return out;
}

double expected_power_gain(double pl_db) {
  return std::pow(10.0, -pl_db / 10.0);
}

}  // namespace riscorr::channel
