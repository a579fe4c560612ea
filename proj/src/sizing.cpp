#include "riscorr/sizing.hpp"

#include <cmath>
#include <stdexcept>

namespace riscorr::sizing {

double min_ris_gain(double g_direct, double g_bs_ris, double g_ris_ue) {
  if (g_direct <= 0.0 || g_bs_ris <= 0.0 || g_ris_ue <= 0.0) {
    throw std::domain_error("min_ris_gain: gains must be positive");
  }
  return g_direct / (g_bs_ris * g_ris_ue);
}

double required_gain_db(double g_min_db, double margin_db) {
  return g_min_db + margin_db;
}

long required_elements(double g_req_db) {
  if (!std::isfinite(g_req_db)) {
    throw std::domain_error("required_elements: gain must be finite");
  }
  const double g = std::pow(10.0, g_req_db / 10.0);
  return static_cast<long>(std::ceil(std::sqrt(g)));
}

int square_side(long n_total) {
  if (n_total < 1) {
    throw std::domain_error("square_side: element count must be >= 1");
  }
  const double root = std::sqrt(static_cast<double>(n_total));
  long side = static_cast<long>(std::floor(root - 1e-9 + 0.5));
  if (static_cast<double>(side) * static_cast<double>(side) <
      static_cast<double>(n_total) - root) {
    ++side;
  }
  return static_cast<int>(side);
}

double beamwidth_deg(int n_z, double spacing_m, double wavelength_m) {
  const double edge = static_cast<double>(n_z) * spacing_m;
  if (wavelength_m > edge) {
    throw std::domain_error("beamwidth_deg: wavelength exceeds aperture edge");
  }
  return std::asin(wavelength_m / edge) * 180.0 / M_PI;
}

RisDimensions dimensions_for_side(int side,
                                  const channel::CarrierConfig& carrier) {
  RisDimensions d;
  d.n_z = d.n_y = side;
  d.n_total = static_cast<long>(side) * side;
  d.spacing_m = 0.0075;
  d.edge_m = side * d.spacing_m;
  // Apertures below one wavelength cannot form a main lobe narrower than the
  // sector; report the 90-degree limit instead of failing.
  d.beamwidth_deg = carrier.wavelength_m() > d.edge_m
                        ? 90.0
                        : beamwidth_deg(side, d.spacing_m,
                                        carrier.wavelength_m());
  return d;
}

std::pair<GainBudget, RisDimensions> size_for_deployment(
    const ScenarioConfig& scenario, double margin_db) {
  if (!scenario.fixture_gains) {
    throw std::domain_error(
        "size_for_deployment: scenario carries no per-link gains");
  }
  const auto& f = *scenario.fixture_gains;
  GainBudget budget;
  budget.g_min_db =
      10.0 * std::log10(min_ris_gain(f.g_bs_ue, f.g_bs_ris, f.g_ris_ue));
  budget.margin_db = margin_db;
  budget.g_req_db = required_gain_db(budget.g_min_db, margin_db);

  const long n_req = required_elements(budget.g_req_db);
  RisDimensions dims = dimensions_for_side(square_side(n_req), scenario.carrier);
  dims.n_total = n_req;
  return {budget, dims};
}

}  // namespace riscorr::sizing
