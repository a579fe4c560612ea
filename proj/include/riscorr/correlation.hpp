#pragma once

#include <cstdint>
#include <vector>

#include "riscorr/steering.hpp"

namespace riscorr::correlation {

/// One element (or column) pair with its worst-case phase difference over
/// all codewords. Indices are (row, col), lexicographically ordered so that
/// idx_a < idx_b.
struct PairRecord {
  std::int32_t a_row = 0;
  std::int32_t a_col = 0;
  std::int32_t b_row = 0;
  std::int32_t b_col = 0;
  double max_diff_deg = 0.0;
  bool correlated = false;
};

enum class PairMode { AllPairs, ColumnPairs };
enum class GroupMode { Exact, Transitive };

struct ConnectedGroups {
  int n_z = 0;
  int n_y = 0;
  std::vector<int> group_of;        // column-major element index -> group id
  std::vector<int> representatives; // group id -> element index
  int n_groups = 0;
};

struct ThresholdSweep {
  std::vector<double> thresholds_deg;
  std::vector<int> correlated_columns;
};

struct ControlMapping {
  int n_loads = 0;
  int n_dc_lines = 0;
  int independent_controls = 0;
  /// The published control-signal notation squares the group count; exposed
  /// alongside the independent count without resolving which was intended.
  long paper_notation_count = 0;
  std::vector<int> representatives;
};

/// Circular distance between two phases, in degrees within [0, 180].
double circular_distance_deg(double a_rad, double b_rad);

/// Worst-case pairwise phase differences across a plan's codewords.
/// AllPairs compares every element pair (bounded by element_cap elements);
/// ColumnPairs compares columns element-wise, max over rows.
std::vector<PairRecord> pairwise_max_differences(
    const steering::SteeringPlan& plan, PairMode mode,
    std::size_t element_cap = 10000);

/// Sets the binary correlation flags: b = 1 iff max_diff_deg <= psi_th_deg.
std::vector<PairRecord> correlate(std::vector<PairRecord> pairs,
                                  double psi_th_deg);

/// Groups from flagged element pairs. Exact mode grows cliques in
/// element-index order (every internal pair must be correlated); Transitive
/// mode takes connected components.
ConnectedGroups build_groups(const std::vector<PairRecord>& pairs, int n_z,
                             int n_y, GroupMode mode = GroupMode::Exact);

/// Per-column internal worst-case spread over all codewords (max circular
/// difference between any two elements of the column, over all q).
std::vector<double> column_internal_spread_deg(const steering::SteeringPlan& plan);

/// Fully correlated column count per threshold (columns whose internal
/// spread stays within the threshold across every codeword).
ThresholdSweep threshold_sweep(const steering::SteeringPlan& plan,
                               const std::vector<double>& thresholds_deg);

/// Connected-RIS grouping for a full-size plan: internally coherent columns
/// become one group each (merged with other columns only when every
/// element-wise pair stays within the threshold); incoherent columns fall
/// back to per-element control.
ConnectedGroups column_groups(const steering::SteeringPlan& plan,
                              double psi_th_deg);

/// One control line per group, driven from the group's representative
/// (lowest row index; row 1 for full-column groups).
ControlMapping connected_control_map(const ConnectedGroups& groups);

}  // namespace riscorr::correlation
