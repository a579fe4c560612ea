#include <exception>
#include <iostream>
#include <optional>
#include <set>
#include <string>

#include <CLI11.hpp>

#include "riscorr/config.hpp"
#include "riscorr/errors.hpp"
#include "riscorr/experiments.hpp"
#include "riscorr/version.hpp"

int main(int argc, char** argv) {
  CLI::App app{"riscorr: connected-RIS sizing, steering and power analysis"};
  app.set_version_flag("--version", std::string("riscorr ") + riscorr::kVersion);

  std::string experiment;
  std::string config_path;
  std::string out_dir = ".";
  std::optional<std::uint64_t> seed;
  std::optional<double> margin_db;
  std::string mode;

  app.add_option("experiment", experiment,
                 "One of: size, sweep, correlate, power, rate, codebook")
      ->required();
  app.add_option("--config", config_path, "Scenario config file")->required();
  app.add_option("--out", out_dir, "Output directory for CSV reports");
  app.add_option("--seed", seed, "Override the config's RNG seed");
  app.add_option("--margin-db", margin_db, "Gain margin in dB")
      ->check(CLI::IsMember({0.0, 3.0, 6.0}));
  app.add_option("--mode", mode, "Restrict reports to one design")
      ->check(CLI::IsMember({"connected", "full", "min"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    riscorr::ScenarioConfig cfg = riscorr::config::parse_config(config_path);
    if (seed) cfg.seed = *seed;
    riscorr::experiments::ExperimentOptions opt;
    opt.out_dir = out_dir;
    opt.margin_db = margin_db;
    opt.mode = mode;
    const auto files =
        riscorr::experiments::run_experiment(experiment, cfg, opt);
    for (const auto& f : files) std::cout << f << "\n";
    return 0;
  } catch (const riscorr::config_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const riscorr::cap_exceeded_error& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 4;
  } catch (const std::domain_error& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
