#pragma once

#include <cstdint>
#include <utility>

#include "riscorr/scenario.hpp"

namespace riscorr::sizing {

struct GainBudget {
  double g_min_db = 0.0;
  double margin_db = 0.0;
  double g_req_db = 0.0;
};

struct RisDimensions {
  long n_total = 0;      // required element count from the gain target
  int n_z = 0;           // square side (rows)
  int n_y = 0;           // square side (columns)
  double spacing_m = 0.0075;
  double edge_m = 0.0;
  double beamwidth_deg = 0.0;
};

/// Minimum RIS gain (linear) for fair coverage: direct-link gain over the
/// product of the two cascade-link gains.
double min_ris_gain(double g_direct, double g_bs_ris, double g_ris_ue);

double required_gain_db(double g_min_db, double margin_db);

/// Minimum element count whose squared value reaches the required gain:
/// ceil(sqrt(10^(g_req_db/10))).
long required_elements(double g_req_db);

/// Side of the square layout holding n_total elements. Round-half-up of
/// sqrt(n_total), matching the published design sizes within +/-1.
int square_side(long n_total);

/// Half-power beamwidth approximation arcsin(lambda / (n_z * spacing)).
double beamwidth_deg(int n_z, double spacing_m, double wavelength_m);

/// Full sizing chain: gains -> required gain -> element count -> square side
/// -> beamwidth, using the scenario's fixture gains.
std::pair<GainBudget, RisDimensions> size_for_deployment(
    const ScenarioConfig& scenario, double margin_db);

/// Dimensions for an explicitly chosen square side (published design sizes).
RisDimensions dimensions_for_side(int side, const channel::CarrierConfig& carrier);

}  // namespace riscorr::sizing
