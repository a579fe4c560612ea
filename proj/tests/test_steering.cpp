#include <doctest.h>

#include <cmath>
#include <complex>

#include "riscorr/rng.hpp"
#include "riscorr/scenario.hpp"
#include "riscorr/sizing.hpp"
#include "riscorr/steering.hpp"

using namespace riscorr;
using namespace riscorr::steering;

namespace {

// Independent brute-force pattern oracle: recomputes the planar factors and
// the element sum from scratch (long double accumulation).
double oracle_gain_db(const PhaseShiftMatrix& psi,
                      const channel::LinkGeometry& geom, double phi_deg) {
  const double d2r = M_PI / 180.0;
  const double u =
      std::cos((geom.theta_ue_deg - geom.theta_bs_deg) * d2r) *
          std::sin((phi_deg - geom.phi_bs_deg) * d2r) +
      std::cos(geom.theta_ue_deg * d2r) * std::sin(phi_deg * d2r);
  const double v = std::sin((geom.theta_ue_deg - geom.theta_bs_deg) * d2r) +
                   std::sin(geom.theta_ue_deg * d2r);
  long double re = 0.0L, im = 0.0L;
  for (int m = 0; m < psi.n_y; ++m) {
    for (int n = 0; n < psi.n_z; ++n) {
      const double a = psi.at(n, m) + (M_PI / 4.0) * (m * u + n * v);
      re += std::cos(a);
      im += std::sin(a);
    }
  }
  const double g = static_cast<double>(re * re + im * im);
  return g > 0.0 ? std::max(10.0 * std::log10(g), -400.0) : -400.0;
}

}  // namespace

TEST_CASE("conjugate phase design") {
  SUBCASE("real-positive channels need no phase shift") {
    channel::ChannelVector h1, h2;
    h1.coefficients.assign(6, {2.0, 0.0});
    h2.coefficients.assign(6, {0.5, 0.0});
    const auto psi = phase_shift_matrix(h1, h2, 3, 2);
    for (double p : psi.phases) CHECK(p == doctest::Approx(0.0));
  }
  SUBCASE("random phases cancel element-wise") {
    Rng rng(11);
    channel::ChannelVector h1, h2;
    for (int k = 0; k < 12; ++k) {
      h1.coefficients.push_back(std::polar(1.0, 2 * M_PI * rng.uniform01()));
      h2.coefficients.push_back(std::polar(1.0, 2 * M_PI * rng.uniform01()));
    }
    const auto psi = phase_shift_matrix(h1, h2, 4, 3);
    for (std::size_t k = 0; k < 12; ++k) {
      const auto cascade = h1.coefficients[k] *
                           std::polar(1.0, psi.phases[k]) *
                           h2.coefficients[k];
      CHECK(cascade.real() == doctest::Approx(1.0));
      CHECK(std::abs(cascade.imag()) < 1e-12);
      CHECK(psi.phases[k] >= 0.0);
      CHECK(psi.phases[k] < 2 * M_PI);
    }
  }
  SUBCASE("length mismatch throws") {
    channel::ChannelVector h1, h2;
    h1.coefficients.assign(4, {1.0, 0.0});
    h2.coefficients.assign(5, {1.0, 0.0});
    CHECK_THROWS_AS(phase_shift_matrix(h1, h2, 2, 2), std::invalid_argument);
  }
}

TEST_CASE("azimuth gain pattern") {
  const auto scenario = named_case(1);

  SUBCASE("single element is flat at 0 dB") {
    const auto dims = sizing::dimensions_for_side(1, scenario.carrier);
    const auto psi = design_codeword(dims, scenario, 10.0);
    const auto pat = gain_pattern(psi, scenario.geometry, scenario.carrier);
    REQUIRE(pat.angles_deg.size() == 161);
    for (double g : pat.gain_db) CHECK(g == doctest::Approx(0.0));
  }
  SUBCASE("matched codeword peaks at the element count squared") {
    for (int side : {4, 16}) {
      const auto dims = sizing::dimensions_for_side(side, scenario.carrier);
      const auto psi = design_codeword(dims, scenario, -20.0);
      const auto pat = gain_pattern(psi, scenario.geometry, scenario.carrier);
      const double expect = 20.0 * std::log10(static_cast<double>(side) * side);
      // grid point at the steering angle
      const std::size_t idx = static_cast<std::size_t>(-20 + 80);
      CHECK(pat.gain_db[idx] == doctest::Approx(expect).epsilon(1e-6));
      for (double g : pat.gain_db) CHECK(g <= expect + 1e-9);
    }
  }
  SUBCASE("matches the brute-force oracle on the whole grid") {
    const auto dims = sizing::dimensions_for_side(8, scenario.carrier);
    const auto psi = design_codeword(dims, scenario, 0.0);
    const auto pat = gain_pattern(psi, scenario.geometry, scenario.carrier);
    for (std::size_t i = 0; i < pat.angles_deg.size(); ++i) {
      CHECK(std::abs(pat.gain_db[i] - oracle_gain_db(psi, scenario.geometry,
                                                     pat.angles_deg[i])) <
            1e-9);
    }
  }
  SUBCASE("invariant under a global phase offset") {
    const auto dims = sizing::dimensions_for_side(6, scenario.carrier);
    auto psi = design_codeword(dims, scenario, 15.0);
    const auto before = gain_pattern(psi, scenario.geometry, scenario.carrier);
    for (double& p : psi.phases) p += 1.234;
    const auto after = gain_pattern(psi, scenario.geometry, scenario.carrier);
    for (std::size_t i = 0; i < before.gain_db.size(); ++i) {
      CHECK(before.gain_db[i] == doctest::Approx(after.gain_db[i]).epsilon(1e-9));
    }
  }
}

TEST_CASE("steering walk over the sector") {
  const auto scenario = named_case(1);
  const auto dims = sizing::dimensions_for_side(83, scenario.carrier);
  const double floor_db = 70.6217;

  SUBCASE("first crossing, monotone sequence, termination") {
    const auto plan = steering_sweep(dims, scenario, floor_db);
    REQUIRE(plan.count() >= 1);
    CHECK(plan.crossing_angles_deg.front() == doctest::Approx(-76.0).epsilon(1.0 / 76.0));
    CHECK(plan.codewords.front().steering_angle_deg == -80.0);
    for (std::size_t i = 1; i < plan.crossing_angles_deg.size(); ++i) {
      CHECK(plan.crossing_angles_deg[i] > plan.crossing_angles_deg[i - 1]);
      CHECK(plan.codewords[i].steering_angle_deg >
            plan.codewords[i - 1].steering_angle_deg);
    }
    CHECK(plan.crossing_angles_deg.back() <= 80.0 + 1e-9);
  }
  SUBCASE("floor below the clamp never crosses") {
    const auto small = sizing::dimensions_for_side(8, scenario.carrier);
    CHECK_THROWS_AS(steering_sweep(small, scenario, -450.0), std::domain_error);
  }
  SUBCASE("floor above the peak is rejected") {
    CHECK_THROWS_AS(steering_sweep(dims, scenario, 100.0), std::domain_error);
  }
}

TEST_CASE("codeword count walk") {
  const auto scenario = named_case(1);
  const auto small = sizing::dimensions_for_side(8, scenario.carrier);

  SUBCASE("threshold below the clamp needs one beam") {
    CHECK(codeword_count(small, scenario, -450.0) == 1);
  }
  SUBCASE("monotone non-decreasing in the threshold") {
    int prev = 0;
    for (double th : {-450.0, -100.0, -20.0, 0.0, 10.0, 15.0}) {
      const int n = codeword_count(small, scenario, th);
      CHECK(n >= prev);
      prev = n;
    }
  }
}

TEST_CASE("handover threshold clamps to the design peak") {
  const auto scenario = named_case(1);
  const auto big = sizing::dimensions_for_side(83, scenario.carrier);
  const auto small = sizing::dimensions_for_side(57, scenario.carrier);
  const double peak57 = 20.0 * std::log10(57.0 * 57.0);
  CHECK(handover_threshold_db(big, 70.6217) == doctest::Approx(70.6217));
  CHECK(handover_threshold_db(small, 70.6217) == doctest::Approx(peak57 - 1.0));
}

TEST_CASE("codeword storage size") {
  CHECK(codeword_storage_bits(83, 3, 52) == 12948);
  CHECK(codeword_storage_bits(6889, 3, 52) == 1074684);
  CHECK(codeword_storage_bits(7, 4, 0) == 0);
  CHECK_THROWS_AS(codeword_storage_bits(-1, 3, 52), std::domain_error);
}

TEST_CASE("shared group phases come from the representative") {
  const auto scenario = named_case(1);
  const auto dims = sizing::dimensions_for_side(4, scenario.carrier);
  const auto psi = design_codeword(dims, scenario, 30.0);
  // two groups: columns {0,1} and {2,3}, reps at (0,0) and (0,2)
  std::vector<int> group_of(16), reps = {0, 8};
  for (int k = 0; k < 16; ++k) group_of[static_cast<std::size_t>(k)] = k < 8 ? 0 : 1;
  const auto shared = apply_groups(psi, group_of, reps);
  for (int k = 0; k < 16; ++k) {
    CHECK(shared.phases[static_cast<std::size_t>(k)] ==
          psi.phases[static_cast<std::size_t>(k < 8 ? 0 : 8)]);
  }
}
