#include "riscorr/rate.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace riscorr::rate {

namespace {

int thread_cap() {
  int cap = static_cast<int>(std::thread::hardware_concurrency());
  if (cap < 1) cap = 1;
  if (const char* env = std::getenv("RISCORR_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) cap = std::min(cap, v);
  }
  return cap;
}

double path_loss_for(const ScenarioConfig& s, double d_m) {
  return channel::path_loss_db(d_m, s.carrier.frequency_ghz);
}

// Cascade amplitude |sum_k h2_k * e^{j psi_k} * h1_k|^2 for one realization.
double cascade_power(const channel::ChannelVector& h1,
                     const steering::PhaseShiftMatrix& psi,
                     const channel::ChannelVector& h2) {
  std::complex<double> sum = 0.0;
  for (std::size_t k = 0; k < h1.size(); ++k) {
    sum += h2.coefficients[k] * std::polar(1.0, psi.phases[k]) *
           h1.coefficients[k];
  }
  return std::norm(sum);
}

steering::PhaseShiftMatrix connected_codeword(
    const steering::PhaseShiftMatrix& full) {
  steering::PhaseShiftMatrix out = full;
  for (int col = 0; col < full.n_y; ++col) {
    const double shared = full.at(0, col);
    for (int row = 1; row < full.n_z; ++row) out.at(row, col) = shared;
  }
  return out;
}

}  // namespace

double noise_power_dbm(double bandwidth_hz) {
  if (bandwidth_hz <= 0.0) {
    throw std::domain_error("noise_power_dbm: bandwidth must be positive");
  }
  return -174.0 + 10.0 * std::log10(bandwidth_hz);
}

double cascade_snr(double p_t_dbm, const channel::ChannelVector& h_bs_ris,
                   const steering::PhaseShiftMatrix& psi,
                   const channel::ChannelVector& h_ris_ue, double n0_dbm) {
  const std::size_t n = psi.phases.size();
  if (h_bs_ris.size() != n || h_ris_ue.size() != n) {
    throw std::invalid_argument("cascade_snr: dimension mismatch");
  }
  const double p_t_w = std::pow(10.0, (p_t_dbm - 30.0) / 10.0);
  const double n0_w = std::pow(10.0, (n0_dbm - 30.0) / 10.0);
  return p_t_w * cascade_power(h_bs_ris, psi, h_ris_ue) / n0_w;
}

double achievable_rate(double snr, double bandwidth_hz) {
  if (snr < 0.0) throw std::domain_error("achievable_rate: negative SNR");
  return bandwidth_hz * std::log2(1.0 + snr);
}

std::vector<RateCurve> rate_sweep(const ScenarioConfig& scenario,
                                  const std::vector<DesignSpec>& designs,
                                  const std::vector<double>& p_t_grid_dbm,
                                  int n_realizations, std::uint64_t seed) {
  if (n_realizations < 1) {
    throw std::domain_error("rate_sweep: need at least one realization");
  }
  const double n0_dbm = noise_power_dbm(scenario.carrier.bandwidth_hz);
  const double pl1 = path_loss_for(scenario, scenario.geometry.d_bs_ris_m);
  const double pl2 = path_loss_for(scenario, scenario.geometry.d_ris_ue_m);

  std::vector<RateCurve> curves;
  curves.reserve(designs.size());

  for (const auto& d : designs) {
    const int n_z = d.dims.n_z, n_y = d.dims.n_y;
    const auto los1 =
        steering::planar_los_vector(scenario.geometry, n_z, n_y, 0);
    const auto los2 =
        steering::planar_los_vector(scenario.geometry, n_z, n_y, 1);
    steering::PhaseShiftMatrix psi = steering::phase_shift_matrix(
        los1, los2, n_z, n_y);
    if (d.connected) psi = connected_codeword(psi);

    // Per-realization cascade powers, indexed so any execution order gives
    // the same accumulation below.
    std::vector<double> powers(static_cast<std::size_t>(n_realizations));
    auto worker = [&](int begin, int end) {
      for (int r = begin; r < end; ++r) {
        const std::uint64_t base =
            seed * 1000003ULL + 2ULL * static_cast<std::uint64_t>(r);
        const auto h1 = channel::sample_rician(
            los1, scenario.rician.kappa_bs_ris_db, pl1, base);
        const auto h2 = channel::sample_rician(
            los2, scenario.rician.kappa_ris_ue_db, pl2, base + 1);
        powers[static_cast<std::size_t>(r)] = cascade_power(h1, psi, h2);
      }
    };
    const int n_threads = std::min(thread_cap(), n_realizations);
    if (n_threads <= 1) {
      worker(0, n_realizations);
    } else {
      std::vector<std::thread> pool;
      const int chunk = (n_realizations + n_threads - 1) / n_threads;
      for (int t = 0; t < n_threads; ++t) {
        const int begin = t * chunk;
        const int end = std::min(n_realizations, begin + chunk);
        if (begin < end) pool.emplace_back(worker, begin, end);
      }
      for (auto& th : pool) th.join();
    }

    RateCurve curve;
    curve.design = d.name;
    curve.p_t_dbm = p_t_grid_dbm;
    curve.n_realizations = n_realizations;
    curve.seed = seed;
    curve.rate_bps.reserve(p_t_grid_dbm.size());
    const double n0_w = std::pow(10.0, (n0_dbm - 30.0) / 10.0);
    for (double pt : p_t_grid_dbm) {
      const double p_t_w = std::pow(10.0, (pt - 30.0) / 10.0);
      double acc = 0.0;
      for (int r = 0; r < n_realizations; ++r) {
        const double snr =
            p_t_w * powers[static_cast<std::size_t>(r)] / n0_w;
        acc += achievable_rate(snr, scenario.carrier.bandwidth_hz);
      }
      curve.rate_bps.push_back(acc / n_realizations);
    }
    curves.push_back(std::move(curve));
  }
  return curves;
}

}  // namespace riscorr::rate
