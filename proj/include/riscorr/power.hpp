#pragma once

#include "riscorr/sizing.hpp"

namespace riscorr::power {

enum class DesignKind { Connected, FullMargin, FullMin };

struct PowerModelParams {
  double p_control_w = 4.8;  // FPGA controller
  double p_unit_w = 0.015;   // one unit cell (3 PIN diodes)
  double p_drive_w = 0.075;  // 4-bit shift register drive block
  double p_update_w = 0.3;   // per-configuration update circuitry
  int n_s = 1;               // control signals per drive block
};

struct PowerBreakdown {
  DesignKind design_kind = DesignKind::Connected;
  long n_units = 0;
  double p_control_w = 0.0;
  double p_circuit_w = 0.0;
  double p_units_w = 0.0;
  double p_total_w = 0.0;
};

struct ControlBudget {
  long loads = 0;
  long dc_lines = 0;
  long independent_controls = 0;
};

/// Drive-circuit power: ceil(n_c / (n_divisor * n_s)) * p_drive_w.
double circuit_power(long n_c, long n_divisor, int n_s, double p_drive_w);

/// Single-panel static power. Controlled units are N_z for a connected
/// design and N_total for a fully controlled one.
PowerBreakdown panel_power(DesignKind kind, const sizing::RisDimensions& dims,
                           const PowerModelParams& params = {});

/// Load / DC-line / independent-control counts for a design.
ControlBudget control_counts(DesignKind kind, const sizing::RisDimensions& dims);

/// Multi-configuration deployment power: n_conf panels plus the update
/// circuitry when reconfiguring dynamically.
double multi_config_power(double panel_w, int n_conf, bool dynamic,
                          const PowerModelParams& params = {});

/// Alternate model: one panel reconfigured in place (panel + update power).
double single_panel_dynamic_power(double panel_w,
                                  const PowerModelParams& params = {});

/// 100 * (1 - new_w / baseline_w).
double reduction_percent(double new_w, double baseline_w);

}  // namespace riscorr::power
