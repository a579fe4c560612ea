#include "riscorr/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "riscorr/errors.hpp"

namespace riscorr::config {

namespace {

struct Entry {
  std::string value;
  int line = 0;
};

using KeyMap = std::map<std::string, Entry>;  // "section.key" -> entry

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

const std::vector<std::string> kKnownKeys = {
    "scenario.deployment_case", "scenario.margin_db", "scenario.psi_th_deg",
    "scenario.transmit_power_dbm", "scenario.seed",
    "carrier.frequency_ghz", "carrier.bandwidth_hz",
    "geometry.d_bs_ue_m", "geometry.d_bs_ris_m", "geometry.d_ris_ue_m",
    "geometry.alpha_deg", "geometry.phi_bs_deg", "geometry.theta_bs_deg",
    "geometry.theta_ue_deg", "geometry.phi_ue_deg",
    "rician.kappa_bs_ris_db", "rician.kappa_ris_ue_db",
    "rician.kappa_bs_ue_db",
    "fixture_gains.g_bs_ue", "fixture_gains.g_bs_ris",
    "fixture_gains.g_ris_ue",
};

bool known_key(const std::string& k) {
  for (const auto& known : kKnownKeys) {
    if (known == k) return true;
  }
  return false;
}

class Reader {
 public:
  Reader(const KeyMap& keys, std::vector<std::string>& errors)
      : keys_(keys), errors_(errors) {}

  bool has(const std::string& key) const { return keys_.count(key) != 0; }

  double number(const std::string& key, double fallback) {
    auto it = keys_.find(key);
    if (it == keys_.end()) return fallback;
    try {
      std::size_t used = 0;
      const double v = std::stod(it->second.value, &used);
      if (used != it->second.value.size()) throw std::invalid_argument("");
      return v;
    } catch (const std::exception&) {
      fail(it->second.line, key + ": not a number ('" + it->second.value + "')");
      return fallback;
    }
  }

  double positive(const std::string& key, double fallback) {
    const double v = number(key, fallback);
    if (has(key) && v <= 0.0) {
      fail(line_of(key), key + ": must be positive (got " +
                             std::to_string(v) + ")");
      return fallback;
    }
    return v;
  }

  double in_range(const std::string& key, double fallback, double lo,
                  double hi) {
    const double v = number(key, fallback);
    if (has(key) && (v < lo || v > hi)) {
      fail(line_of(key), key + ": out of range [" + std::to_string(lo) + ", " +
                             std::to_string(hi) + "]");
      return fallback;
    }
    return v;
  }

  long integer(const std::string& key, long fallback) {
    const double v = number(key, static_cast<double>(fallback));
    if (has(key) && v != std::floor(v)) {
      fail(line_of(key), key + ": must be an integer");
      return fallback;
    }
    return static_cast<long>(v);
  }

  int line_of(const std::string& key) const {
    auto it = keys_.find(key);
    return it == keys_.end() ? 0 : it->second.line;
  }

  void fail(int line, const std::string& message) {
    errors_.push_back("line " + std::to_string(line) + ": " + message);
  }

 private:
  const KeyMap& keys_;
  std::vector<std::string>& errors_;
};

}  // namespace

ScenarioConfig parse_config_text(const std::string& text,
                                 const std::string& origin) {
  std::vector<std::string> errors;
  KeyMap keys;
  {
    std::istringstream in(text);
    std::string raw, section;
    int line_no = 0;
    while (std::getline(in, raw)) {
      ++line_no;
      std::string line = trim(raw);
      if (line.empty() || line[0] == '#' || line[0] == ';') continue;
      if (line.front() == '[') {
        if (line.back() != ']') {
          errors.push_back("line " + std::to_string(line_no) +
                           ": unterminated section header");
          continue;
        }
        section = trim(line.substr(1, line.size() - 2));
        continue;
      }
      const std::size_t eq = line.find('=');
      if (eq == std::string::npos) {
        errors.push_back("line " + std::to_string(line_no) +
                         ": expected key = value");
        continue;
      }
      const std::string key = section + "." + trim(line.substr(0, eq));
      const std::string value = trim(line.substr(eq + 1));
      if (!known_key(key)) {
        errors.push_back("line " + std::to_string(line_no) +
                         ": unknown key '" + key + "'");
        continue;
      }
      keys[key] = Entry{value, line_no};
    }
  }

  Reader r(keys, errors);
  const long dep_case = r.integer("scenario.deployment_case", 0);
  if (r.has("scenario.deployment_case") && (dep_case < 0 || dep_case > 3)) {
    r.fail(r.line_of("scenario.deployment_case"),
           "scenario.deployment_case: must be 0 (custom) or 1..3");
  }

  ScenarioConfig cfg;
  if (dep_case >= 1 && dep_case <= 3) {
    const double margin = r.number("scenario.margin_db", 6.0);
    if (r.has("scenario.margin_db") && margin != 0.0 && margin != 3.0 &&
        margin != 6.0) {
      r.fail(r.line_of("scenario.margin_db"),
             "scenario.margin_db: named cases accept 0, 3 or 6");
    }
    cfg = named_case(static_cast<int>(dep_case),
                     (margin == 0.0 || margin == 3.0 || margin == 6.0)
                         ? margin
                         : 6.0);
  }

  cfg.margin_db = r.number("scenario.margin_db", cfg.margin_db);
  cfg.psi_th_deg = r.in_range("scenario.psi_th_deg", cfg.psi_th_deg, 0.0, 180.0);
  cfg.transmit_power_dbm =
      r.number("scenario.transmit_power_dbm", cfg.transmit_power_dbm);
  cfg.seed = static_cast<std::uint64_t>(
      r.integer("scenario.seed", static_cast<long>(cfg.seed)));

  cfg.carrier.frequency_ghz =
      r.positive("carrier.frequency_ghz", cfg.carrier.frequency_ghz);
  cfg.carrier.bandwidth_hz =
      r.positive("carrier.bandwidth_hz", cfg.carrier.bandwidth_hz);

  auto& g = cfg.geometry;
  g.d_bs_ue_m = r.positive("geometry.d_bs_ue_m", g.d_bs_ue_m);
  g.d_bs_ris_m = r.positive("geometry.d_bs_ris_m", g.d_bs_ris_m);
  g.d_ris_ue_m = r.positive("geometry.d_ris_ue_m", g.d_ris_ue_m);
  g.alpha_deg = r.in_range("geometry.alpha_deg", g.alpha_deg, 0.0, 180.0);
  g.phi_bs_deg = r.in_range("geometry.phi_bs_deg", g.phi_bs_deg, -90.0, 90.0);
  g.theta_bs_deg =
      r.in_range("geometry.theta_bs_deg", g.theta_bs_deg, -90.0, 90.0);
  g.theta_ue_deg =
      r.in_range("geometry.theta_ue_deg", g.theta_ue_deg, -90.0, 90.0);
  g.phi_ue_deg = r.in_range("geometry.phi_ue_deg", g.phi_ue_deg, -90.0, 90.0);

  cfg.rician.kappa_bs_ris_db =
      r.number("rician.kappa_bs_ris_db", cfg.rician.kappa_bs_ris_db);
  cfg.rician.kappa_ris_ue_db =
      r.number("rician.kappa_ris_ue_db", cfg.rician.kappa_ris_ue_db);
  cfg.rician.kappa_bs_ue_db =
      r.number("rician.kappa_bs_ue_db", cfg.rician.kappa_bs_ue_db);

  const bool any_fixture = r.has("fixture_gains.g_bs_ue") ||
                           r.has("fixture_gains.g_bs_ris") ||
                           r.has("fixture_gains.g_ris_ue");
  if (any_fixture) {
    if (!(r.has("fixture_gains.g_bs_ue") && r.has("fixture_gains.g_bs_ris") &&
          r.has("fixture_gains.g_ris_ue"))) {
      errors.push_back(
          "fixture_gains: all three gains (g_bs_ue, g_bs_ris, g_ris_ue) are "
          "required together");
    } else {
      FixtureGains f;
      f.g_bs_ue = r.positive("fixture_gains.g_bs_ue", 1.0);
      f.g_bs_ris = r.positive("fixture_gains.g_bs_ris", 1.0);
      f.g_ris_ue = r.positive("fixture_gains.g_ris_ue", 1.0);
      cfg.fixture_gains = f;
    }
  }

  cfg.deployment_case = static_cast<int>(dep_case);

  if (!errors.empty()) {
    std::string message = origin + ": invalid configuration";
    for (const auto& e : errors) message += "\n  " + e;
    throw config_error(message);
  }
  return cfg;
}

ScenarioConfig parse_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw config_error(path + ": cannot open config file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), path);
}

std::string config_hash(const ScenarioConfig& c) {
  std::ostringstream out;
  out.precision(17);
  out << c.deployment_case << '|' << c.margin_db << '|' << c.psi_th_deg << '|'
      << c.transmit_power_dbm << '|' << c.seed << '|'
      << c.carrier.frequency_ghz << '|' << c.carrier.bandwidth_hz << '|'
      << c.geometry.d_bs_ue_m << '|' << c.geometry.d_bs_ris_m << '|'
      << c.geometry.d_ris_ue_m << '|' << c.geometry.alpha_deg << '|'
      << c.geometry.phi_bs_deg << '|' << c.geometry.theta_bs_deg << '|'
      << c.geometry.theta_ue_deg << '|' << c.geometry.phi_ue_deg << '|'
      << c.rician.kappa_bs_ris_db << '|' << c.rician.kappa_ris_ue_db << '|'
      << c.rician.kappa_bs_ue_db;
  if (c.fixture_gains) {
    out << '|' << c.fixture_gains->g_bs_ue << '|' << c.fixture_gains->g_bs_ris
        << '|' << c.fixture_gains->g_ris_ue;
  }
  const std::string s = out.str();
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace riscorr::config
