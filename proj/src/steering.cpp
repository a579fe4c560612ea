#include "riscorr/steering.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace riscorr::steering {

namespace {

constexpr double kDegToRad = M_PI / 180.0;
constexpr double kTwoPi = 2.0 * M_PI;
constexpr double kPhaseStep = M_PI / 4.0;  // 2*pi*delta1/lambda at lambda/8
constexpr double kFloorClampDb = -400.0;
constexpr double kCrossingTolDb = 0.01;

double wrap_phase(double p) {
  p = std::fmod(p, kTwoPi);
  return p < 0.0 ? p + kTwoPi : p;
}

}  // namespace

PlanarFactors cascade_factors(const channel::LinkGeometry& geom,
                              double phi_deg) {
  const double dt = (geom.theta_ue_deg - geom.theta_bs_deg) * kDegToRad;
  const double tu = geom.theta_ue_deg * kDegToRad;
  PlanarFactors f;
  f.u = std::cos(dt) * std::sin((phi_deg - geom.phi_bs_deg) * kDegToRad) +
        std::cos(tu) * std::sin(phi_deg * kDegToRad);
  f.v = std::sin(dt) + std::sin(tu);
  return f;
}

channel::ChannelVector planar_los_vector(const channel::LinkGeometry& geom,
                                         int n_z, int n_y, int link) {
  const double dt = (geom.theta_ue_deg - geom.theta_bs_deg) * kDegToRad;
  const double tu = geom.theta_ue_deg * kDegToRad;
  double u, v;
  if (link == 0) {
    u = std::cos(dt) *
        std::sin((geom.phi_ue_deg - geom.phi_bs_deg) * kDegToRad);
    v = std::sin(dt);
  } else {
    u = std::cos(tu) * std::sin(geom.phi_ue_deg * kDegToRad);
    v = std::sin(tu);
  }
  channel::ChannelVector out;
  out.kind = channel::ChannelVector::Kind::LoS;
  out.coefficients.resize(static_cast<std::size_t>(n_z) * n_y);
  for (int m = 0; m < n_y; ++m) {
    for (int n = 0; n < n_z; ++n) {
      out.coefficients[static_cast<std::size_t>(m) * n_z + n] =
          std::polar(1.0, kPhaseStep * (m * u + n * v));
    }
  }
  return out;
}

PhaseShiftMatrix phase_shift_matrix(const channel::ChannelVector& h_bs_ris,
                                    const channel::ChannelVector& h_ris_ue,
                                    int n_z, int n_y) {
  const std::size_t n = static_cast<std::size_t>(n_z) * n_y;
  if (h_bs_ris.size() != n || h_ris_ue.size() != n) {
    throw std::invalid_argument("phase_shift_matrix: channel length mismatch");
  }
  PhaseShiftMatrix psi;
  psi.n_z = n_z;
  psi.n_y = n_y;
  psi.phases.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    psi.phases[k] = wrap_phase(-(std::arg(h_bs_ris.coefficients[k]) +
                                 std::arg(h_ris_ue.coefficients[k])));
  }
  return psi;
}

PhaseShiftMatrix design_codeword(const sizing::RisDimensions& dims,
                                 const ScenarioConfig& scenario,
                                 double phi_ue_deg) {
  channel::LinkGeometry geom = scenario.geometry;
  geom.phi_ue_deg = phi_ue_deg;
  const auto h1 = planar_los_vector(geom, dims.n_z, dims.n_y, 0);
  const auto h2 = planar_los_vector(geom, dims.n_z, dims.n_y, 1);
  PhaseShiftMatrix psi = phase_shift_matrix(h1, h2, dims.n_z, dims.n_y);
  psi.steering_angle_deg = phi_ue_deg;
  return psi;
}

GainPattern gain_pattern(const PhaseShiftMatrix& psi,
                         const channel::LinkGeometry& geom,
                         const channel::CarrierConfig& /*carrier*/) {
  GainPattern out;
  out.angles_deg.reserve(GainPattern::kGridSize);
  out.gain_db.reserve(GainPattern::kGridSize);
  const double v = cascade_factors(geom, 0.0).v;
  for (int a = -80; a <= 80; ++a) {
    const double phi = static_cast<double>(a);
    const double u = cascade_factors(geom, phi).u;
    std::complex<double> sum = 0.0;
    for (int m = 0; m < psi.n_y; ++m) {
      for (int n = 0; n < psi.n_z; ++n) {
        sum += std::polar(1.0, psi.at(n, m) + kPhaseStep * (m * u + n * v));
      }
    }
    const double g = std::norm(sum);
    out.angles_deg.push_back(phi);
    out.gain_db.push_back(g > 0.0
                              ? std::max(10.0 * std::log10(g), kFloorClampDb)
                              : kFloorClampDb);
  }
  return out;
}

std::optional<double> first_crossing(const GainPattern& pattern,
                                     double after_deg, double floor_db) {
  for (int i = 1; i < GainPattern::kGridSize; ++i) {
    const double phi = pattern.angles_deg[static_cast<std::size_t>(i)];
    if (phi <= after_deg) continue;
    const double g1 = pattern.gain_db[static_cast<std::size_t>(i)];
    if (g1 > floor_db + kCrossingTolDb) continue;
    const double g0 = pattern.gain_db[static_cast<std::size_t>(i - 1)];
    double crossing = phi - 1.0;
    if (g0 > floor_db) crossing += (g0 - floor_db) / (g0 - g1);
    // Keep the walk strictly advancing even when the previous grid point
    // already sits below the floor.
    return std::max(crossing, std::nextafter(after_deg, 1e9));
  }
  return std::nullopt;
}

SteeringPlan steering_sweep(const sizing::RisDimensions& dims,
                            const ScenarioConfig& scenario,
                            double g_floor_db) {
  const double peak_db =
      20.0 * std::log10(static_cast<double>(dims.n_z) * dims.n_y);
  if (g_floor_db > peak_db) {
    throw std::domain_error("steering_sweep: floor exceeds the design peak");
  }
  SteeringPlan plan;
  double steering = -80.0;
  double prev_crossing = -80.0;
  while (steering <= 80.0) {
    PhaseShiftMatrix psi = design_codeword(dims, scenario, steering);
    const GainPattern pat = gain_pattern(psi, scenario.geometry,
                                         scenario.carrier);
    const auto crossing = first_crossing(pat, steering, g_floor_db);
    plan.codewords.push_back(std::move(psi));
    if (!crossing) {
      if (plan.codewords.size() == 1) {
        throw std::domain_error(
            "steering_sweep: pattern never falls to the floor in the sector; "
            "lower the floor");
      }
      // Final beam covers through +80 deg.
      plan.crossing_angles_deg.push_back(80.0);
      break;
    }
    plan.crossing_angles_deg.push_back(*crossing);
    const double dphi = *crossing - prev_crossing;
    prev_crossing = *crossing;
    steering = *crossing + dphi / 2.0;
  }
  return plan;
}

int codeword_count(const sizing::RisDimensions& dims,
                   const ScenarioConfig& scenario, double g_th_db) {
  const double peak_db =
      20.0 * std::log10(static_cast<double>(dims.n_z) * dims.n_y);
  if (g_th_db > peak_db) {
    throw std::domain_error("codeword_count: threshold exceeds the peak");
  }
  int n_conf = 0;
  double steering = -80.0;
  while (steering <= 80.0) {
    const PhaseShiftMatrix psi = design_codeword(dims, scenario, steering);
    const GainPattern pat =
        gain_pattern(psi, scenario.geometry, scenario.carrier);
    ++n_conf;
    const auto crossing = first_crossing(pat, steering, g_th_db);
    if (!crossing) break;
    steering = *crossing;
  }
  return n_conf;
}

double handover_threshold_db(const sizing::RisDimensions& dims,
                             double g_min_db) {
  const double peak_db =
      20.0 * std::log10(static_cast<double>(dims.n_z) * dims.n_y);
  return std::min(g_min_db, peak_db - 1.0);
}

long codeword_storage_bits(long n_controls, int bits_per_control,
                           long n_codewords) {
  if (n_controls < 0 || bits_per_control < 0 || n_codewords < 0) {
    throw std::domain_error("codeword_storage_bits: negative input");
  }
  return n_controls * bits_per_control * n_codewords;
}

PhaseShiftMatrix apply_groups(const PhaseShiftMatrix& psi,
                              const std::vector<int>& group_of,
                              const std::vector<int>& representatives) {
  if (group_of.size() != psi.phases.size()) {
    throw std::invalid_argument("apply_groups: group map size mismatch");
  }
  PhaseShiftMatrix out = psi;
  for (std::size_t k = 0; k < out.phases.size(); ++k) {
    const int rep = representatives[static_cast<std::size_t>(group_of[k])];
    out.phases[k] = psi.phases[static_cast<std::size_t>(rep)];
  }
  return out;
}

}  // namespace riscorr::steering
