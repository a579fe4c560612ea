#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "riscorr/channel.hpp"
#include "riscorr/config.hpp"
#include "riscorr/correlation.hpp"
#include "riscorr/errors.hpp"
#include "riscorr/experiments.hpp"
#include "riscorr/power.hpp"
#include "riscorr/rate.hpp"
#include "riscorr/scenario.hpp"
#include "riscorr/sizing.hpp"
#include "riscorr/steering.hpp"
#include "riscorr/version.hpp"

namespace py = pybind11;
using namespace riscorr;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Connected-RIS sizing, steering, correlation, power and rate";
  m.attr("__version__") = kVersion;

  py::register_exception<config_error>(m, "ConfigError");
  py::register_exception<cap_exceeded_error>(m, "CapExceededError");

  // --- scenario -----------------------------------------------------------
  py::class_<channel::CarrierConfig>(m, "CarrierConfig")
      .def(py::init<>())
      .def_readwrite("frequency_ghz", &channel::CarrierConfig::frequency_ghz)
      .def_readwrite("bandwidth_hz", &channel::CarrierConfig::bandwidth_hz)
      .def("wavelength_m", &channel::CarrierConfig::wavelength_m)
      .def("spacing_m", &channel::CarrierConfig::spacing_m);

  py::class_<channel::LinkGeometry>(m, "LinkGeometry")
      .def(py::init<>())
      .def_readwrite("d_bs_ue_m", &channel::LinkGeometry::d_bs_ue_m)
      .def_readwrite("d_bs_ris_m", &channel::LinkGeometry::d_bs_ris_m)
      .def_readwrite("d_ris_ue_m", &channel::LinkGeometry::d_ris_ue_m)
      .def_readwrite("alpha_deg", &channel::LinkGeometry::alpha_deg)
      .def_readwrite("phi_bs_deg", &channel::LinkGeometry::phi_bs_deg)
      .def_readwrite("theta_bs_deg", &channel::LinkGeometry::theta_bs_deg)
      .def_readwrite("theta_ue_deg", &channel::LinkGeometry::theta_ue_deg)
      .def_readwrite("phi_ue_deg", &channel::LinkGeometry::phi_ue_deg);

  py::class_<channel::RicianParams>(m, "RicianParams")
      .def(py::init<>())
      .def_readwrite("kappa_bs_ris_db", &channel::RicianParams::kappa_bs_ris_db)
      .def_readwrite("kappa_ris_ue_db", &channel::RicianParams::kappa_ris_ue_db)
      .def_readwrite("kappa_bs_ue_db", &channel::RicianParams::kappa_bs_ue_db);

  py::class_<FixtureGains>(m, "FixtureGains")
      .def(py::init<>())
      .def_readwrite("g_bs_ue", &FixtureGains::g_bs_ue)
      .def_readwrite("g_bs_ris", &FixtureGains::g_bs_ris)
      .def_readwrite("g_ris_ue", &FixtureGains::g_ris_ue);

  py::class_<ScenarioConfig>(m, "ScenarioConfig")
      .def(py::init<>())
      .def_readwrite("carrier", &ScenarioConfig::carrier)
      .def_readwrite("geometry", &ScenarioConfig::geometry)
      .def_readwrite("rician", &ScenarioConfig::rician)
      .def_readwrite("margin_db", &ScenarioConfig::margin_db)
      .def_readwrite("psi_th_deg", &ScenarioConfig::psi_th_deg)
      .def_readwrite("transmit_power_dbm", &ScenarioConfig::transmit_power_dbm)
      .def_readwrite("seed", &ScenarioConfig::seed)
      .def_readwrite("deployment_case", &ScenarioConfig::deployment_case)
      .def_readwrite("fixture_gains", &ScenarioConfig::fixture_gains);

  m.def("named_case", &named_case, py::arg("deployment_case"),
        py::arg("margin_db") = 6.0);
  m.def("parse_config", &config::parse_config, py::arg("path"));
  m.def("config_hash", &config::config_hash, py::arg("config"));

  // --- channel ------------------------------------------------------------
  py::class_<channel::ChannelVector>(m, "ChannelVector")
      .def_readonly("coefficients", &channel::ChannelVector::coefficients);

  m.def("path_loss_db", &channel::path_loss_db, py::arg("d_m"),
        py::arg("f_ghz"));
  m.def("fspl_db", &channel::fspl_db, py::arg("d_km"), py::arg("f_ghz"));
  m.def("ris_ue_distance", &channel::ris_ue_distance, py::arg("d_bs_ue_m"),
        py::arg("d_bs_ris_m"), py::arg("alpha_deg"));
  m.def("expected_power_gain", &channel::expected_power_gain, py::arg("pl_db"));
  m.def("sample_rician", &channel::sample_rician, py::arg("los"),
        py::arg("kappa_db"), py::arg("pl_db"), py::arg("seed"));

  // --- sizing -------------------------------------------------------------
  py::class_<sizing::GainBudget>(m, "GainBudget")
      .def_readonly("g_min_db", &sizing::GainBudget::g_min_db)
      .def_readonly("margin_db", &sizing::GainBudget::margin_db)
      .def_readonly("g_req_db", &sizing::GainBudget::g_req_db);

  py::class_<sizing::RisDimensions>(m, "RisDimensions")
      .def_readonly("n_total", &sizing::RisDimensions::n_total)
      .def_readonly("n_z", &sizing::RisDimensions::n_z)
      .def_readonly("n_y", &sizing::RisDimensions::n_y)
      .def_readonly("spacing_m", &sizing::RisDimensions::spacing_m)
      .def_readonly("edge_m", &sizing::RisDimensions::edge_m)
      .def_readonly("beamwidth_deg", &sizing::RisDimensions::beamwidth_deg);

  m.def("min_ris_gain", &sizing::min_ris_gain);
  m.def("required_gain_db", &sizing::required_gain_db);
  m.def("required_elements", &sizing::required_elements);
  m.def("square_side", &sizing::square_side);
  m.def("beamwidth_deg", &sizing::beamwidth_deg, py::arg("n_z"),
        py::arg("spacing_m"), py::arg("wavelength_m"));
  m.def("size_for_deployment", &sizing::size_for_deployment,
        py::arg("scenario"), py::arg("margin_db"));
  m.def("dimensions_for_side", &sizing::dimensions_for_side, py::arg("side"),
        py::arg("carrier"));

  // --- steering -----------------------------------------------------------
  py::class_<steering::PhaseShiftMatrix>(m, "PhaseShiftMatrix")
      .def_readonly("n_z", &steering::PhaseShiftMatrix::n_z)
      .def_readonly("n_y", &steering::PhaseShiftMatrix::n_y)
      .def_readonly("phases", &steering::PhaseShiftMatrix::phases)
      .def_readonly("steering_angle_deg",
                    &steering::PhaseShiftMatrix::steering_angle_deg)
      .def("at",
           static_cast<double (steering::PhaseShiftMatrix::*)(int, int) const>(
               &steering::PhaseShiftMatrix::at));

  py::class_<steering::GainPattern>(m, "GainPattern")
      .def_readonly("angles_deg", &steering::GainPattern::angles_deg)
      .def_readonly("gain_db", &steering::GainPattern::gain_db);

  py::class_<steering::SteeringPlan>(m, "SteeringPlan")
      .def_readonly("codewords", &steering::SteeringPlan::codewords)
      .def_readonly("crossing_angles_deg",
                    &steering::SteeringPlan::crossing_angles_deg)
      .def("count", &steering::SteeringPlan::count);

  m.def("design_codeword", &steering::design_codeword, py::arg("dims"),
        py::arg("scenario"), py::arg("phi_ue_deg"));
  m.def("gain_pattern", &steering::gain_pattern, py::arg("psi"),
        py::arg("geometry"), py::arg("carrier"));
  m.def("steering_sweep", &steering::steering_sweep, py::arg("dims"),
        py::arg("scenario"), py::arg("g_floor_db"));
  m.def("codeword_count", &steering::codeword_count, py::arg("dims"),
        py::arg("scenario"), py::arg("g_th_db"));
  m.def("handover_threshold_db", &steering::handover_threshold_db,
        py::arg("dims"), py::arg("g_min_db"));
  m.def("codeword_storage_bits", &steering::codeword_storage_bits,
        py::arg("n_controls"), py::arg("bits_per_control"),
        py::arg("n_codewords"));

  // --- correlation --------------------------------------------------------
  py::class_<correlation::ConnectedGroups>(m, "ConnectedGroups")
      .def_readonly("n_z", &correlation::ConnectedGroups::n_z)
      .def_readonly("n_y", &correlation::ConnectedGroups::n_y)
      .def_readonly("group_of", &correlation::ConnectedGroups::group_of)
      .def_readonly("representatives",
                    &correlation::ConnectedGroups::representatives)
      .def_readonly("n_groups", &correlation::ConnectedGroups::n_groups);

  py::class_<correlation::ThresholdSweep>(m, "ThresholdSweep")
      .def_readonly("thresholds_deg",
                    &correlation::ThresholdSweep::thresholds_deg)
      .def_readonly("correlated_columns",
                    &correlation::ThresholdSweep::correlated_columns);

  m.def("circular_distance_deg", &correlation::circular_distance_deg);
  m.def("column_internal_spread_deg", &correlation::column_internal_spread_deg);
  m.def("threshold_sweep", &correlation::threshold_sweep, py::arg("plan"),
        py::arg("thresholds_deg"));
  m.def("column_groups", &correlation::column_groups, py::arg("plan"),
        py::arg("psi_th_deg"));

  // --- power --------------------------------------------------------------
  py::enum_<power::DesignKind>(m, "DesignKind")
      .value("Connected", power::DesignKind::Connected)
      .value("FullMargin", power::DesignKind::FullMargin)
      .value("FullMin", power::DesignKind::FullMin);

  py::class_<power::PowerBreakdown>(m, "PowerBreakdown")
      .def_readonly("n_units", &power::PowerBreakdown::n_units)
      .def_readonly("p_control_w", &power::PowerBreakdown::p_control_w)
      .def_readonly("p_circuit_w", &power::PowerBreakdown::p_circuit_w)
      .def_readonly("p_units_w", &power::PowerBreakdown::p_units_w)
      .def_readonly("p_total_w", &power::PowerBreakdown::p_total_w);

  m.def("panel_power",
        [](power::DesignKind kind, const sizing::RisDimensions& dims) {
          return power::panel_power(kind, dims);
        });
  m.def("multi_config_power",
        [](double panel_w, int n_conf, bool dynamic) {
          return power::multi_config_power(panel_w, n_conf, dynamic);
        });
  m.def("reduction_percent", &power::reduction_percent);

  // --- rate ---------------------------------------------------------------
  py::class_<rate::RateCurve>(m, "RateCurve")
      .def_readonly("design", &rate::RateCurve::design)
      .def_readonly("p_t_dbm", &rate::RateCurve::p_t_dbm)
      .def_readonly("rate_bps", &rate::RateCurve::rate_bps)
      .def_readonly("n_realizations", &rate::RateCurve::n_realizations)
      .def_readonly("seed", &rate::RateCurve::seed);

  m.def("noise_power_dbm", &rate::noise_power_dbm);
  m.def("achievable_rate", &rate::achievable_rate);
  m.def(
      "rate_sweep",
      [](const ScenarioConfig& scenario,
         const std::vector<std::tuple<std::string, int, bool>>& designs,
         const std::vector<double>& grid, int n_realizations,
         std::uint64_t seed) {
        std::vector<rate::DesignSpec> specs;
        for (const auto& [name, side, connected] : designs) {
          specs.push_back({name,
                           sizing::dimensions_for_side(side, scenario.carrier),
                           connected});
        }
        return rate::rate_sweep(scenario, specs, grid, n_realizations, seed);
      },
      py::arg("scenario"), py::arg("designs"), py::arg("p_t_grid_dbm"),
      py::arg("n_realizations"), py::arg("seed"));

  // --- experiments --------------------------------------------------------
  m.def(
      "run_experiment",
      [](const std::string& name, const ScenarioConfig& cfg,
         const std::string& out_dir) {
        experiments::ExperimentOptions opt;
        opt.out_dir = out_dir;
        return experiments::run_experiment(name, cfg, opt);
      },
      py::arg("name"), py::arg("config"), py::arg("out_dir"));
  m.def("design_side", &experiments::design_side, py::arg("config"),
        py::arg("margin_db"));
}
