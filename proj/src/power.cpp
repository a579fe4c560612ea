#include "riscorr/power.hpp"

#include <cmath>
#include <stdexcept>

namespace riscorr::power {

double circuit_power(long n_c, long n_divisor, int n_s, double p_drive_w) {
  if (n_c < 0) throw std::domain_error("circuit_power: negative component count");
  if (n_c == 0) return 0.0;
  if (n_divisor <= 0 || n_s <= 0) {
    throw std::domain_error("circuit_power: divisor must be positive");
  }
  const long blocks =
      (n_c + n_divisor * static_cast<long>(n_s) - 1) / (n_divisor * n_s);
  return static_cast<double>(blocks) * p_drive_w;
}

PowerBreakdown panel_power(DesignKind kind, const sizing::RisDimensions& dims,
                           const PowerModelParams& params) {
  PowerBreakdown out;
  out.design_kind = kind;
  out.n_units = kind == DesignKind::Connected
                    ? static_cast<long>(dims.n_z)
                    : static_cast<long>(dims.n_total);
  out.p_control_w = params.p_control_w;
  out.p_circuit_w =
      circuit_power(out.n_units, out.n_units, params.n_s, params.p_drive_w);
  out.p_units_w = static_cast<double>(out.n_units) * params.p_unit_w;
  out.p_total_w = out.p_control_w + out.p_circuit_w + out.p_units_w;
  return out;
}

ControlBudget control_counts(DesignKind kind,
                             const sizing::RisDimensions& dims) {
  const long n = kind == DesignKind::Connected
                     ? static_cast<long>(dims.n_z)
                     : static_cast<long>(dims.n_total);
  return {n, n, n};
}

double multi_config_power(double panel_w, int n_conf, bool dynamic,
                          const PowerModelParams& params) {
  if (n_conf < 1) throw std::domain_error("multi_config_power: n_conf < 1");
  return static_cast<double>(n_conf) * panel_w +
         (dynamic ? params.p_update_w : 0.0);
}

double single_panel_dynamic_power(double panel_w,
                                  const PowerModelParams& params) {
  return panel_w + params.p_update_w;
}

double reduction_percent(double new_w, double baseline_w) {
  if (baseline_w <= 0.0) {
    throw std::domain_error("reduction_percent: baseline must be positive");
  }
  return 100.0 * (1.0 - new_w / baseline_w);
}

}  // namespace riscorr::power
