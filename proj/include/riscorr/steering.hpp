#pragma once

#include <optional>
#include <vector>

#include "riscorr/channel.hpp"
#include "riscorr/scenario.hpp"
#include "riscorr/sizing.hpp"

namespace riscorr::steering {

/// One codeword: N_z x N_y unit-modulus reflection phases, stored
/// column-major (k = m * n_z + n for 0-based row n, column m).
struct PhaseShiftMatrix {
  int n_z = 0;
  int n_y = 0;
  std::vector<double> phases;  // radians in [0, 2*pi)
  double steering_angle_deg = 0.0;

  double& at(int row, int col) { return phases[static_cast<std::size_t>(col) * n_z + row]; }
  double at(int row, int col) const { return phases[static_cast<std::size_t>(col) * n_z + row]; }
  long n_total() const { return static_cast<long>(n_z) * n_y; }
};

/// Azimuth gain evaluated on the fixed grid -80:1:80 degrees.
struct GainPattern {
  static constexpr int kGridSize = 161;
  std::vector<double> angles_deg;  // exactly -80, -79, ..., 80
  std::vector<double> gain_db;     // clamped at -400 dB at exact nulls
};

struct SteeringPlan {
  std::vector<PhaseShiftMatrix> codewords;
  std::vector<double> crossing_angles_deg;  // one per codeword; last may be +80
  int count() const { return static_cast<int>(codewords.size()); }
};

/// Azimuth/elevation phase progression of the planar LoS response. The
/// azimuth component follows the column index and carries the
/// phi-dependent parts of the two link factors; the elevation component
/// follows the row index and carries the theta-only parts.
struct PlanarFactors {
  double u = 0.0;  // per-column phase step multiplier at the steering angle
  double v = 0.0;  // per-row phase step multiplier (fixed over the sweep)
};

/// Cascade (BS side + UE side) planar factors at azimuth phi_deg.
PlanarFactors cascade_factors(const channel::LinkGeometry& geom, double phi_deg);

/// Planar LoS response of one link as a column-major ChannelVector.
/// link 0 = BS-RIS, link 1 = RIS-UE.
channel::ChannelVector planar_los_vector(const channel::LinkGeometry& geom,
                                         int n_z, int n_y, int link);

/// Reflection phases conjugating the cascade phase per element (element-wise
/// -(arg h_bs + arg h_ue), wrapped to [0, 2*pi)).
PhaseShiftMatrix phase_shift_matrix(const channel::ChannelVector& h_bs_ris,
                                    const channel::ChannelVector& h_ris_ue,
                                    int n_z, int n_y);

/// Codeword steering toward phi_ue_deg, designed from the planar LoS
/// responses of both links.
PhaseShiftMatrix design_codeword(const sizing::RisDimensions& dims,
                                 const ScenarioConfig& scenario,
                                 double phi_ue_deg);

/// Deterministic LoS-only azimuth gain of an applied phase profile.
GainPattern gain_pattern(const PhaseShiftMatrix& psi,
                         const channel::LinkGeometry& geom,
                         const channel::CarrierConfig& carrier);

/// First angle above after_deg where the pattern falls to floor_db, with
/// linear interpolation between 1-degree grid points.
std::optional<double> first_crossing(const GainPattern& pattern,
                                     double after_deg, double floor_db);

/// Beam-steering sweep: codewords from -80 deg onward, each advanced past the
/// previous floor crossing by half the crossing step.
SteeringPlan steering_sweep(const sizing::RisDimensions& dims,
                            const ScenarioConfig& scenario, double g_floor_db);

/// Crossing walk counting the configurations needed for consecutive beams to
/// hand over at gain >= g_th_db over the [-80, 80] sector.
int codeword_count(const sizing::RisDimensions& dims,
                   const ScenarioConfig& scenario, double g_th_db);

/// Handover threshold for a design: the fair-coverage floor, clamped to
/// 1 dB below the design's peak gain when the peak cannot reach the floor.
double handover_threshold_db(const sizing::RisDimensions& dims,
                             double g_min_db);

long codeword_storage_bits(long n_controls, int bits_per_control,
                           long n_codewords);

/// Share each control group's phase from its representative element.
PhaseShiftMatrix apply_groups(const PhaseShiftMatrix& psi,
                              const std::vector<int>& group_of,
                              const std::vector<int>& representatives);

}  // namespace riscorr::steering
