#include <doctest.h>

#include <cmath>
#include <map>

#include "riscorr/correlation.hpp"
#include "riscorr/errors.hpp"
#include "riscorr/rng.hpp"
#include "riscorr/steering.hpp"

using namespace riscorr;
using namespace riscorr::correlation;

namespace {

steering::SteeringPlan random_plan(int n_z, int n_y, int n_codewords,
                                   std::uint64_t seed) {
  Rng rng(seed);
  steering::SteeringPlan plan;
  for (int q = 0; q < n_codewords; ++q) {
    steering::PhaseShiftMatrix psi;
    psi.n_z = n_z;
    psi.n_y = n_y;
    psi.phases.resize(static_cast<std::size_t>(n_z) * n_y);
    for (double& p : psi.phases) p = 2.0 * M_PI * rng.uniform01();
    plan.codewords.push_back(std::move(psi));
  }
  return plan;
}

}  // namespace

TEST_CASE("circular phase distance") {
  const double d2r = M_PI / 180.0;
  CHECK(circular_distance_deg(1.0, 1.0) == doctest::Approx(0.0));
  CHECK(circular_distance_deg(10.0 * d2r, 350.0 * d2r) == doctest::Approx(20.0));
  CHECK(circular_distance_deg(0.7, 2.1) ==
        doctest::Approx(circular_distance_deg(2.1, 0.7)));
  CHECK(circular_distance_deg(0.7 + 6 * 2 * M_PI, 2.1) ==
        doctest::Approx(circular_distance_deg(0.7, 2.1)));
  for (double a : {0.1, 1.5, 3.0, 5.9}) {
    for (double b : {0.0, 2.2, 4.4, 6.1}) {
      const double d = circular_distance_deg(a, b);
      CHECK(d >= 0.0);
      CHECK(d <= 180.0);
    }
  }
}

TEST_CASE("worst-case pairwise differences") {
  SUBCASE("duplicated codewords with equal phases give zero") {
    steering::SteeringPlan plan;
    steering::PhaseShiftMatrix psi;
    psi.n_z = psi.n_y = 2;
    psi.phases.assign(4, 1.25);
    plan.codewords.assign(3, psi);
    for (const auto& p : pairwise_max_differences(plan, PairMode::AllPairs)) {
      CHECK(p.max_diff_deg == doctest::Approx(0.0));
    }
  }
  SUBCASE("matches a brute-force triple loop on a 6x6 toy") {
    const auto plan = random_plan(6, 6, 3, 99);
    const auto pairs = pairwise_max_differences(plan, PairMode::AllPairs);
    CHECK(pairs.size() == 36u * 35u / 2u);
    std::map<std::pair<int, int>, double> oracle;
    for (int k1 = 0; k1 < 36; ++k1) {
      for (int k2 = k1 + 1; k2 < 36; ++k2) {
        double worst = 0.0;
        for (const auto& cw : plan.codewords) {
          worst = std::max(
              worst, circular_distance_deg(
                         cw.phases[static_cast<std::size_t>(k1)],
                         cw.phases[static_cast<std::size_t>(k2)]));
        }
        oracle[{k1, k2}] = worst;
      }
    }
    for (const auto& p : pairs) {
      const int a = p.a_col * 6 + p.a_row;
      const int b = p.b_col * 6 + p.b_row;
      CHECK(p.max_diff_deg ==
            doctest::Approx(oracle.at({std::min(a, b), std::max(a, b)})));
    }
  }
  SUBCASE("column mode takes the max over rows") {
    const auto plan = random_plan(4, 3, 2, 5);
    const auto cols = pairwise_max_differences(plan, PairMode::ColumnPairs);
    CHECK(cols.size() == 3u);
    for (const auto& p : cols) {
      double worst = 0.0;
      for (const auto& cw : plan.codewords) {
        for (int row = 0; row < 4; ++row) {
          worst = std::max(worst, circular_distance_deg(cw.at(row, p.a_col),
                                                        cw.at(row, p.b_col)));
        }
      }
      CHECK(p.max_diff_deg == doctest::Approx(worst));
    }
  }
  SUBCASE("all-pairs mode enforces the element cap") {
    const auto plan = random_plan(10, 10, 1, 1);
    CHECK_THROWS_AS(pairwise_max_differences(plan, PairMode::AllPairs, 99),
                    cap_exceeded_error);
  }
}

TEST_CASE("threshold flagging") {
  const auto plan = random_plan(4, 4, 2, 3);
  auto pairs = pairwise_max_differences(plan, PairMode::AllPairs);

  SUBCASE("zero threshold flags only exact matches") {
    for (const auto& p : correlate(pairs, 0.0)) {
      CHECK(p.correlated == (p.max_diff_deg == 0.0));
    }
  }
  SUBCASE("180 degrees flags everything") {
    for (const auto& p : correlate(pairs, 180.0)) CHECK(p.correlated);
  }
  SUBCASE("flag sets grow with the threshold") {
    for (int rep = 0; rep < 20; ++rep) {
      const auto pl = random_plan(3, 5, 2, 100 + rep);
      auto ps = pairwise_max_differences(pl, PairMode::AllPairs);
      const auto lo = correlate(ps, 40.0);
      const auto hi = correlate(ps, 90.0);
      for (std::size_t i = 0; i < lo.size(); ++i) {
        if (lo[i].correlated) CHECK(hi[i].correlated);
      }
    }
  }
  SUBCASE("threshold outside [0, 180] is rejected") {
    CHECK_THROWS_AS(correlate(pairs, -1.0), std::domain_error);
  }
}

TEST_CASE("group construction") {
  SUBCASE("fully correlated collapses to one group") {
    const auto plan = random_plan(3, 3, 2, 8);
    auto pairs = correlate(pairwise_max_differences(plan, PairMode::AllPairs),
                           180.0);
    const auto g = build_groups(pairs, 3, 3, GroupMode::Exact);
    CHECK(g.n_groups == 1);
    CHECK(g.representatives[0] == 0);
  }
  SUBCASE("nothing correlated keeps every element separate") {
    const auto plan = random_plan(3, 3, 2, 8);
    auto pairs = correlate(pairwise_max_differences(plan, PairMode::AllPairs),
                           0.0);
    const auto g = build_groups(pairs, 3, 3, GroupMode::Exact);
    CHECK(g.n_groups == 9);
  }
  SUBCASE("exact mode needs a clique, transitive mode a path") {
    // elements 0..3 in a 4x1 column; only (0,1) and (1,2) correlated
    std::vector<PairRecord> pairs;
    for (int a = 0; a < 4; ++a) {
      for (int b = a + 1; b < 4; ++b) {
        PairRecord p;
        p.a_row = a;
        p.b_row = b;
        p.correlated = (a == 0 && b == 1) || (a == 1 && b == 2);
        pairs.push_back(p);
      }
    }
    const auto exact = build_groups(pairs, 4, 1, GroupMode::Exact);
    CHECK(exact.n_groups == 3);  // {0,1}, {2}, {3}
    CHECK(exact.group_of[0] == exact.group_of[1]);
    CHECK(exact.group_of[2] != exact.group_of[0]);
    const auto trans = build_groups(pairs, 4, 1, GroupMode::Transitive);
    CHECK(trans.n_groups == 2);  // {0,1,2}, {3}
    CHECK(trans.group_of[0] == trans.group_of[2]);
    CHECK(trans.group_of[3] != trans.group_of[0]);
  }
  SUBCASE("exact-mode members stay within the threshold of their rep") {
    const double th = 120.0;
    const auto plan = random_plan(4, 4, 3, 21);
    auto pairs = correlate(pairwise_max_differences(plan, PairMode::AllPairs),
                           th);
    const auto g = build_groups(pairs, 4, 4, GroupMode::Exact);
    for (std::size_t k = 0; k < g.group_of.size(); ++k) {
      const int rep = g.representatives[static_cast<std::size_t>(
          g.group_of[k])];
      for (const auto& cw : plan.codewords) {
        CHECK(circular_distance_deg(
                  cw.phases[k],
                  cw.phases[static_cast<std::size_t>(rep)]) <= th + 1e-9);
      }
    }
  }
}

TEST_CASE("coherent-column counting") {
  SUBCASE("180-degree threshold admits every column") {
    const auto plan = random_plan(5, 7, 3, 31);
    const auto sweep = threshold_sweep(plan, {180.0});
    CHECK(sweep.correlated_columns[0] == 7);
  }
  SUBCASE("zero threshold admits none on a random plan") {
    const auto plan = random_plan(5, 7, 3, 31);
    const auto sweep = threshold_sweep(plan, {0.0});
    CHECK(sweep.correlated_columns[0] == 0);
  }
  SUBCASE("counts are monotone in the threshold") {
    for (int rep = 0; rep < 20; ++rep) {
      const auto plan = random_plan(4, 6, 2, 500 + rep);
      const auto sweep =
          threshold_sweep(plan, {10.0, 60.0, 110.0, 160.0, 180.0});
      for (std::size_t i = 1; i < sweep.correlated_columns.size(); ++i) {
        CHECK(sweep.correlated_columns[i] >= sweep.correlated_columns[i - 1]);
      }
    }
  }
  SUBCASE("unsorted thresholds are rejected") {
    const auto plan = random_plan(2, 2, 1, 1);
    CHECK_THROWS_AS(threshold_sweep(plan, {30.0, 10.0}), std::invalid_argument);
  }
}

TEST_CASE("column-level grouping and control mapping") {
  SUBCASE("coherent columns get one line each, reps in the first row") {
    steering::SteeringPlan plan;
    steering::PhaseShiftMatrix psi;
    psi.n_z = 4;
    psi.n_y = 3;
    psi.phases.resize(12);
    // columns 0/1/2 internally constant but far apart pairwise
    for (int col = 0; col < 3; ++col) {
      for (int row = 0; row < 4; ++row) psi.at(row, col) = col * 2.0;
    }
    plan.codewords.push_back(psi);
    const auto g = column_groups(plan, 10.0);
    CHECK(g.n_groups == 3);
    for (int rep : g.representatives) CHECK(rep % 4 == 0);  // first row
    const auto map = connected_control_map(g);
    CHECK(map.n_loads == 3);
    CHECK(map.n_dc_lines == 3);
    CHECK(map.independent_controls == 3);
    CHECK(map.paper_notation_count == 9);
  }
  SUBCASE("incoherent columns fall back to per-element control") {
    const auto plan = random_plan(4, 3, 2, 77);
    const auto g = column_groups(plan, 1.0);
    CHECK(g.n_groups == 12);
  }
  SUBCASE("group count never grows with the threshold") {
    const auto plan = random_plan(4, 5, 2, 13);
    int prev = 1 << 20;
    for (double th : {1.0, 45.0, 90.0, 135.0, 180.0}) {
      const int n = column_groups(plan, th).n_groups;
      CHECK(n <= prev);
      prev = n;
    }
  }
}
