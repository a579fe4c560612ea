#include "riscorr/scenario.hpp"

#include <cmath>
#include <stdexcept>

namespace riscorr {

namespace {

// Direct-link gain shared by all cases (d_BS,UE = 100 m).
constexpr double kDirectGain = 1.9596e-9;

// Case 1 worked per-link gains.
constexpr double kCase1BsRis = 5.7544e-8;
constexpr double kCase1RisUe = 2.9512e-9;

// Minimum fair-coverage gains (dB) for cases 2 and 3; the per-link split is
// derived so the product reproduces these exactly.
constexpr double kCase2MinGainDb = 75.3370;
constexpr double kCase3MinGainDb = 75.6557;

FixtureGains fixtures_for(int c) {
  FixtureGains f;
  f.g_bs_ue = kDirectGain;
  if (c == 1) {
    f.g_bs_ris = kCase1BsRis;
    f.g_ris_ue = kCase1RisUe;
    return f;
  }
  const double d_bs_ris = (c == 2) ? 50.0 : 70.0;
  const double g_min_db = (c == 2) ? kCase2MinGainDb : kCase3MinGainDb;
  // Street-canyon loss at f = 5 minus the 1.3 dB calibration offset the
  // worked case-1 losses carry.
  const double l1_db =
      32.4 + 21.0 * std::log10(d_bs_ris) + 20.0 * std::log10(5.0) - 1.3;
  f.g_bs_ris = std::pow(10.0, -l1_db / 10.0);
  f.g_ris_ue =
      f.g_bs_ue / (std::pow(10.0, g_min_db / 10.0) * f.g_bs_ris);
  return f;
}

}  // namespace

ScenarioConfig named_case(int deployment_case, double margin_db) {
  if (deployment_case < 1 || deployment_case > 3) {
    throw std::domain_error("named_case: deployment case must be 1, 2 or 3");
  }
  ScenarioConfig s;
  s.deployment_case = deployment_case;
  s.margin_db = margin_db;
  s.carrier.frequency_ghz = 5.0;
  s.carrier.bandwidth_hz = 1e6;

  auto& g = s.geometry;
  g.d_bs_ue_m = 100.0;
  switch (deployment_case) {
    case 1:
      g.d_bs_ris_m = 20.0;
      g.d_ris_ue_m = 81.5;
      g.alpha_deg = 20.0;
      break;
    case 2:
      g.d_bs_ris_m = 50.0;
      g.d_ris_ue_m = 55.7;
      g.alpha_deg = 20.0;
      break;
    default:
      g.d_bs_ris_m = 70.0;
      g.d_ris_ue_m = 47.0;
      g.alpha_deg = 25.0;
      break;
  }
  g.phi_bs_deg = -45.0;
  g.theta_bs_deg = 60.0;
  g.theta_ue_deg = 30.25;
  g.phi_ue_deg = 0.0;

  s.rician.kappa_bs_ris_db = 10.0;
  s.rician.kappa_ris_ue_db = 10.0;
  s.rician.kappa_bs_ue_db = 1.0;
  s.fixture_gains = fixtures_for(deployment_case);
  return s;
}

}  // namespace riscorr
