#include <doctest.h>

#include <string>

#include "riscorr/config.hpp"
#include "riscorr/errors.hpp"

using namespace riscorr;
using riscorr::config::config_hash;
using riscorr::config::parse_config_text;

TEST_CASE("named case expansion") {
  const auto cfg = parse_config_text(
      "[scenario]\n"
      "deployment_case = 1\n"
      "margin_db = 6\n");
  CHECK(cfg.deployment_case == 1);
  CHECK(cfg.margin_db == 6.0);
  CHECK(cfg.geometry.d_bs_ue_m == doctest::Approx(100.0));
  CHECK(cfg.geometry.d_bs_ris_m == doctest::Approx(20.0));
  CHECK(cfg.geometry.d_ris_ue_m == doctest::Approx(81.5));
  CHECK(cfg.rician.kappa_bs_ue_db == doctest::Approx(1.0));
  REQUIRE(cfg.fixture_gains.has_value());
  CHECK(cfg.fixture_gains->g_bs_ris == doctest::Approx(5.7544e-8));
}

TEST_CASE("overrides apply after expansion") {
  const auto cfg = parse_config_text(
      "[scenario]\n"
      "deployment_case = 2\n"
      "seed = 9\n"
      "psi_th_deg = 25\n"
      "[geometry]\n"
      "phi_ue_deg = 40\n");
  CHECK(cfg.geometry.d_bs_ris_m == doctest::Approx(50.0));
  CHECK(cfg.geometry.phi_ue_deg == doctest::Approx(40.0));
  CHECK(cfg.seed == 9);
  CHECK(cfg.psi_th_deg == doctest::Approx(25.0));
}

TEST_CASE("violations are collected with line context") {
  SUBCASE("negative distance names the field") {
    try {
      parse_config_text(
          "[geometry]\n"
          "d_bs_ris_m = -5\n");
      FAIL("expected config_error");
    } catch (const config_error& e) {
      const std::string what = e.what();
      CHECK(what.find("d_bs_ris_m") != std::string::npos);
      CHECK(what.find("line 2") != std::string::npos);
    }
  }
  SUBCASE("unknown key is listed") {
    try {
      parse_config_text(
          "[scenario]\n"
          "deployment_caze = 1\n");
      FAIL("expected config_error");
    } catch (const config_error& e) {
      CHECK(std::string(e.what()).find("deployment_caze") !=
            std::string::npos);
    }
  }
  SUBCASE("all problems are reported together") {
    try {
      parse_config_text(
          "[carrier]\n"
          "frequency_ghz = -1\n"
          "bandwidth_hz = zero\n"
          "[geometry]\n"
          "alpha_deg = 270\n");
      FAIL("expected config_error");
    } catch (const config_error& e) {
      const std::string what = e.what();
      CHECK(what.find("frequency_ghz") != std::string::npos);
      CHECK(what.find("bandwidth_hz") != std::string::npos);
      CHECK(what.find("alpha_deg") != std::string::npos);
    }
  }
  SUBCASE("named cases restrict the margin") {
    CHECK_THROWS_AS(parse_config_text("[scenario]\n"
                                      "deployment_case = 1\n"
                                      "margin_db = 4\n"),
                    config_error);
  }
  SUBCASE("partial fixture gains are rejected") {
    CHECK_THROWS_AS(parse_config_text("[fixture_gains]\n"
                                      "g_bs_ue = 1e-9\n"),
                    config_error);
  }
}

TEST_CASE("comments and blank lines are ignored") {
  const auto cfg = parse_config_text(
      "# a comment\n"
      "\n"
      "[scenario]\n"
      "; another comment\n"
      "deployment_case = 3\n");
  CHECK(cfg.deployment_case == 3);
  CHECK(cfg.geometry.d_bs_ris_m == doctest::Approx(70.0));
}

TEST_CASE("config hash tracks content") {
  const auto a = parse_config_text("[scenario]\ndeployment_case = 1\n");
  auto b = a;
  CHECK(config_hash(a) == config_hash(b));
  CHECK(config_hash(a).size() == 16);
  b.seed = 2;
  CHECK(config_hash(a) != config_hash(b));
  b = a;
  b.geometry.phi_ue_deg = 1.0;
  CHECK(config_hash(a) != config_hash(b));
}

TEST_CASE("missing file is a config error") {
  CHECK_THROWS_AS(riscorr::config::parse_config("/nonexistent/cfg.ini"),
                  config_error);
}
