#include "riscorr/experiments.hpp"

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "riscorr/config.hpp"
#include "riscorr/correlation.hpp"
#include "riscorr/errors.hpp"
#include "riscorr/power.hpp"
#include "riscorr/rate.hpp"
#include "riscorr/sizing.hpp"
#include "riscorr/steering.hpp"
#include "riscorr/version.hpp"

namespace riscorr::experiments {

namespace {

namespace fs = std::filesystem;

constexpr int kBitsPerControl = 3;  // pi/4 phase step -> 8 states

struct Writer {
  std::ofstream out;
  std::string path;

  Writer(const fs::path& p, const ScenarioConfig& cfg,
         const std::string& columns)
      : out(p, std::ios::binary), path(p.string()) {
    if (!out) throw std::runtime_error("cannot write " + p.string());
    out << "# riscorr " << kVersion << " seed=" << cfg.seed
        << " config_hash=" << config::config_hash(cfg) << "\n"
        << columns << "\n";
  }

  void row(const std::string& line) { out << line << "\n"; }
};

std::string fmt(const char* format, ...) {
  char buf[256];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof(buf), format, args);
  va_end(args);
  return buf;
}

FixtureGains gains_of(const ScenarioConfig& cfg) {
  if (!cfg.fixture_gains) {
    throw config_error(
        "experiment needs per-link gains: use a named deployment case or "
        "provide [fixture_gains]");
  }
  return *cfg.fixture_gains;
}

double min_gain_db(const ScenarioConfig& cfg) {
  const auto g = gains_of(cfg);
  return 10.0 *
         std::log10(sizing::min_ris_gain(g.g_bs_ue, g.g_bs_ris, g.g_ris_ue));
}

sizing::RisDimensions design_dims(const ScenarioConfig& cfg,
                                  double margin_db) {
  return sizing::dimensions_for_side(design_side(cfg, margin_db), cfg.carrier);
}

bool mode_selected(const std::string& mode, const std::string& design) {
  return mode.empty() || mode == design;
}

std::vector<std::string> run_size(const ScenarioConfig& cfg,
                                  const ExperimentOptions& opt) {
  Writer w(fs::path(opt.out_dir) / "size.csv", cfg,
           "margin_db,g_min_db,g_req_db,n_required,side,edge_m,beamwidth_deg");
  std::vector<double> margins = opt.margin_db
                                    ? std::vector<double>{*opt.margin_db}
                                    : std::vector<double>{0.0, 3.0, 6.0};
  for (double m : margins) {
    const auto [budget, derived] = sizing::size_for_deployment(cfg, m);
    const auto dims = sizing::dimensions_for_side(design_side(cfg, m),
                                                  cfg.carrier);
    w.row(fmt("%.1f,%.4f,%.4f,%ld,%d,%.4f,%.4f", m, budget.g_min_db,
              budget.g_req_db, derived.n_total, dims.n_z, dims.edge_m,
              dims.beamwidth_deg));
  }
  return {w.path};
}

std::vector<std::string> run_sweep(const ScenarioConfig& cfg,
                                   const ExperimentOptions& opt) {
  const double margin = opt.margin_db.value_or(cfg.margin_db);
  const auto dims = design_dims(cfg, margin);
  const double floor_db =
      steering::handover_threshold_db(dims, min_gain_db(cfg));
  const auto plan = steering::steering_sweep(dims, cfg, floor_db);

  std::vector<std::string> written;
  {
    Writer w(fs::path(opt.out_dir) / "sweep.csv", cfg,
             "codeword_index,steering_angle_deg,crossing_deg");
    for (int q = 0; q < plan.count(); ++q) {
      w.row(fmt("%d,%.6f,%.6f", q + 1,
                plan.codewords[static_cast<std::size_t>(q)].steering_angle_deg,
                plan.crossing_angles_deg[static_cast<std::size_t>(q)]));
    }
    written.push_back(w.path);
  }
  {
    Writer w(fs::path(opt.out_dir) / "patterns.csv", cfg,
             "codeword_index,angle_deg,gain_db");
    for (int q = 0; q < plan.count(); ++q) {
      const auto pat = steering::gain_pattern(
          plan.codewords[static_cast<std::size_t>(q)], cfg.geometry,
          cfg.carrier);
      for (std::size_t i = 0; i < pat.angles_deg.size(); ++i) {
        w.row(fmt("%d,%.1f,%.6f", q + 1, pat.angles_deg[i], pat.gain_db[i]));
      }
    }
    written.push_back(w.path);
  }
  {
    Writer w(fs::path(opt.out_dir) / "codewords.csv", cfg,
             "codeword_index,row_index,col_index,phase_radians");
    for (int q = 0; q < plan.count(); ++q) {
      const auto& cw = plan.codewords[static_cast<std::size_t>(q)];
      for (int col = 0; col < cw.n_y; ++col) {
        for (int row = 0; row < cw.n_z; ++row) {
          w.row(fmt("%d,%d,%d,%.10f", q + 1, row + 1, col + 1,
                    cw.at(row, col)));
        }
      }
    }
    written.push_back(w.path);
  }
  return written;
}

std::vector<std::string> run_correlate(const ScenarioConfig& cfg,
                                       const ExperimentOptions& opt) {
  const double margin = opt.margin_db.value_or(cfg.margin_db);
  const auto dims = design_dims(cfg, margin);
  const double floor_db =
      steering::handover_threshold_db(dims, min_gain_db(cfg));
  const auto plan = steering::steering_sweep(dims, cfg, floor_db);

  std::vector<std::string> written;
  {
    std::vector<double> thresholds;
    for (int t = 5; t <= 60; t += 5) thresholds.push_back(t);
    const auto sweep = correlation::threshold_sweep(plan, thresholds);
    Writer w(fs::path(opt.out_dir) / "threshold_sweep.csv", cfg,
             "psi_th_deg,correlated_columns");
    for (std::size_t i = 0; i < sweep.thresholds_deg.size(); ++i) {
      w.row(fmt("%.1f,%d", sweep.thresholds_deg[i],
                sweep.correlated_columns[i]));
    }
    written.push_back(w.path);
  }
  {
    const auto groups = correlation::column_groups(plan, cfg.psi_th_deg);
    const auto map = correlation::connected_control_map(groups);
    Writer w(fs::path(opt.out_dir) / "groups.csv", cfg,
             "row_index,col_index,group_id");
    for (int col = 0; col < groups.n_y; ++col) {
      for (int row = 0; row < groups.n_z; ++row) {
        w.row(fmt("%d,%d,%d", row + 1, col + 1,
                  groups.group_of[static_cast<std::size_t>(col) * groups.n_z +
                                  row] +
                      1));
      }
    }
    written.push_back(w.path);
    Writer s(fs::path(opt.out_dir) / "control_summary.csv", cfg,
             "n_groups,n_loads,n_dc_lines,independent_controls");
    s.row(fmt("%d,%d,%d,%d", groups.n_groups, map.n_loads, map.n_dc_lines,
              map.independent_controls));
    written.push_back(s.path);
  }
  return written;
}

std::vector<std::string> run_power(const ScenarioConfig& cfg,
                                   const ExperimentOptions& opt) {
  Writer w(fs::path(opt.out_dir) / "power.csv", cfg,
           "case,design,margin_db,p_control_w,p_circuit_w,p_units_w,"
           "p_total_w");
  struct Row {
    const char* design;
    power::DesignKind kind;
    double margin;
  };
  const Row rows[] = {
      {"connected", power::DesignKind::Connected, 3.0},
      {"connected", power::DesignKind::Connected, 6.0},
      {"full", power::DesignKind::FullMargin, 3.0},
      {"full", power::DesignKind::FullMargin, 6.0},
      {"min", power::DesignKind::FullMin, 0.0},
  };
  for (const auto& r : rows) {
    if (!mode_selected(opt.mode, r.design)) continue;
    if (opt.margin_db && r.margin != *opt.margin_db &&
        r.kind != power::DesignKind::FullMin) {
      continue;
    }
    const auto dims = design_dims(cfg, r.margin);
    const auto p = power::panel_power(r.kind, dims);
    w.row(fmt("%d,%s,%.1f,%.3f,%.3f,%.3f,%.3f", cfg.deployment_case, r.design,
              r.margin, p.p_control_w, p.p_circuit_w, p.p_units_w,
              p.p_total_w));
  }
  return {w.path};
}

std::vector<std::string> run_rate(const ScenarioConfig& cfg,
                                  const ExperimentOptions& opt) {
  const double margin = opt.margin_db.value_or(cfg.margin_db);
  const auto dims = design_dims(cfg, margin);
  std::vector<rate::DesignSpec> designs;
  if (mode_selected(opt.mode, "full")) {
    designs.push_back({"full", dims, false});
  }
  if (mode_selected(opt.mode, "connected")) {
    designs.push_back({"connected", dims, true});
  }
  if (mode_selected(opt.mode, "min")) {
    designs.push_back({"min", design_dims(cfg, 0.0), false});
  }
  std::vector<double> grid;
  for (int pt = 0; pt <= 40; pt += 5) grid.push_back(pt);
  const auto curves = rate::rate_sweep(cfg, designs, grid, 500, cfg.seed);

  Writer w(fs::path(opt.out_dir) / "rate.csv", cfg,
           "p_t_dbm,design,mean_rate_bps");
  for (const auto& c : curves) {
    for (std::size_t i = 0; i < c.p_t_dbm.size(); ++i) {
      w.row(fmt("%.1f,%s,%.4f", c.p_t_dbm[i], c.design.c_str(),
                c.rate_bps[i]));
    }
  }
  return {w.path};
}

std::vector<std::string> run_codebook(const ScenarioConfig& cfg,
                                      const ExperimentOptions& opt) {
  const double g_min = min_gain_db(cfg);
  Writer w(fs::path(opt.out_dir) / "codebook.csv", cfg,
           "design,side,threshold_db,n_codewords,n_controls,bits_per_control,"
           "storage_bits");
  struct Row {
    const char* design;
    double margin;
    bool connected;
  };
  const Row rows[] = {
      {"connected", opt.margin_db.value_or(cfg.margin_db), true},
      {"min", 0.0, false},
  };
  for (const auto& r : rows) {
    if (!mode_selected(opt.mode, r.design)) continue;
    const auto dims = design_dims(cfg, r.margin);
    const double th = steering::handover_threshold_db(dims, g_min);
    const int n_conf = steering::codeword_count(dims, cfg, th);
    const long n_controls =
        r.connected ? dims.n_z : static_cast<long>(dims.n_total);
    const long bits =
        steering::codeword_storage_bits(n_controls, kBitsPerControl, n_conf);
    w.row(fmt("%s,%d,%.4f,%d,%ld,%d,%ld", r.design, dims.n_z, th, n_conf,
              n_controls, kBitsPerControl, bits));
  }
  return {w.path};
}

}  // namespace

int design_side(const ScenarioConfig& config, double margin_db) {
  if (config.deployment_case >= 1 && config.deployment_case <= 3 &&
      (margin_db == 0.0 || margin_db == 3.0 || margin_db == 6.0)) {
    static constexpr int kSides[3][3] = {
        {57, 70, 83},   // case 1: min, 3 dB, 6 dB
        {76, 91, 108},  // case 2
        {78, 93, 110},  // case 3
    };
    const int col = margin_db == 0.0 ? 0 : (margin_db == 3.0 ? 1 : 2);
    return kSides[config.deployment_case - 1][col];
  }
  return sizing::size_for_deployment(config, margin_db).second.n_z;
}

std::vector<std::string> run_experiment(const std::string& name,
                                        const ScenarioConfig& config,
                                        const ExperimentOptions& options) {
  fs::create_directories(options.out_dir);
  if (name == "size") return run_size(config, options);
  if (name == "sweep") return run_sweep(config, options);
  if (name == "correlate") return run_correlate(config, options);
  if (name == "power") return run_power(config, options);
  if (name == "rate") return run_rate(config, options);
  if (name == "codebook") return run_codebook(config, options);
  throw config_error("unknown experiment '" + name +
                     "' (expected size, sweep, correlate, power, rate or "
                     "codebook)");
}

}  // namespace riscorr::experiments
