#include "riscorr/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "riscorr/errors.hpp"

namespace riscorr::correlation {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

int rep_element(const std::vector<int>& members, int n_z) {
  // Lowest row index, ties broken by column (row 1 for full-column groups).
  int best = members.front();
  for (int k : members) {
    const int row = k % n_z, col = k / n_z;
    const int brow = best % n_z, bcol = best / n_z;
    if (row < brow || (row == brow && col < bcol)) best = k;
  }
  return best;
}

ConnectedGroups finalize(std::vector<std::vector<int>> groups, int n_z,
                         int n_y) {
  ConnectedGroups out;
  out.n_z = n_z;
  out.n_y = n_y;
  out.n_groups = static_cast<int>(groups.size());
  out.group_of.assign(static_cast<std::size_t>(n_z) * n_y, -1);
  out.representatives.reserve(groups.size());
  for (std::size_t g = 0; g < groups.size(); ++g) {
    for (int k : groups[g]) out.group_of[static_cast<std::size_t>(k)] = static_cast<int>(g);
    out.representatives.push_back(rep_element(groups[g], n_z));
  }
  return out;
}

}  // namespace

double circular_distance_deg(double a_rad, double b_rad) {
  double d = std::fmod(std::abs(a_rad - b_rad), kTwoPi);
  if (d > M_PI) d = kTwoPi - d;
  return d * 180.0 / M_PI;
}

std::vector<PairRecord> pairwise_max_differences(
    const steering::SteeringPlan& plan, PairMode mode,
    std::size_t element_cap) {
  if (plan.codewords.empty()) {
    throw std::invalid_argument("pairwise_max_differences: empty plan");
  }
  const auto& first = plan.codewords.front();
  const int n_z = first.n_z, n_y = first.n_y;
  std::vector<PairRecord> out;

  if (mode == PairMode::AllPairs) {
    const std::size_t n = static_cast<std::size_t>(n_z) * n_y;
    if (n > element_cap) {
      throw cap_exceeded_error(
          "pairwise_max_differences: element count exceeds the all-pairs cap");
    }
    out.reserve(n * (n - 1) / 2);
    for (std::size_t k1 = 0; k1 + 1 < n; ++k1) {
      for (std::size_t k2 = k1 + 1; k2 < n; ++k2) {
        double worst = 0.0;
        for (const auto& cw : plan.codewords) {
          worst = std::max(worst, circular_distance_deg(cw.phases[k1],
                                                        cw.phases[k2]));
        }
        PairRecord r;
        r.a_row = static_cast<std::int32_t>(k1) % n_z;
        r.a_col = static_cast<std::int32_t>(k1) / n_z;
        r.b_row = static_cast<std::int32_t>(k2) % n_z;
        r.b_col = static_cast<std::int32_t>(k2) / n_z;
        if (std::tie(r.b_row, r.b_col) < std::tie(r.a_row, r.a_col)) {
          std::swap(r.a_row, r.b_row);
          std::swap(r.a_col, r.b_col);
        }
        r.max_diff_deg = worst;
        out.push_back(r);
      }
    }
    return out;
  }

  out.reserve(static_cast<std::size_t>(n_y) * (n_y - 1) / 2);
  for (int c1 = 0; c1 + 1 < n_y; ++c1) {
    for (int c2 = c1 + 1; c2 < n_y; ++c2) {
      double worst = 0.0;
      for (const auto& cw : plan.codewords) {
        for (int row = 0; row < n_z; ++row) {
          worst = std::max(worst, circular_distance_deg(cw.at(row, c1),
                                                        cw.at(row, c2)));
        }
      }
      PairRecord r;
      r.a_col = c1;
      r.b_col = c2;
      r.max_diff_deg = worst;
      out.push_back(r);
    }
  }
  return out;
}

std::vector<PairRecord> correlate(std::vector<PairRecord> pairs,
                                  double psi_th_deg) {
  if (psi_th_deg < 0.0 || psi_th_deg > 180.0) {
    throw std::domain_error("correlate: threshold outside [0, 180] deg");
  }
  for (auto& p : pairs) p.correlated = p.max_diff_deg <= psi_th_deg;
  return pairs;
}

ConnectedGroups build_groups(const std::vector<PairRecord>& pairs, int n_z,
                             int n_y, GroupMode mode) {
  const std::size_t n = static_cast<std::size_t>(n_z) * n_y;
  auto index_of = [n_z](std::int32_t row, std::int32_t col) {
    return static_cast<std::size_t>(col) * n_z + row;
  };

  if (mode == GroupMode::Transitive) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) {
        x = parent[static_cast<std::size_t>(x)] =
            parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      }
      return x;
    };
    for (const auto& p : pairs) {
      if (!p.correlated) continue;
      const int a = find(static_cast<int>(index_of(p.a_row, p.a_col)));
      const int b = find(static_cast<int>(index_of(p.b_row, p.b_col)));
      if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
    std::vector<std::vector<int>> groups;
    std::vector<int> root_to_group(n, -1);
    for (std::size_t k = 0; k < n; ++k) {
      const int r = find(static_cast<int>(k));
      if (root_to_group[static_cast<std::size_t>(r)] < 0) {
        root_to_group[static_cast<std::size_t>(r)] = static_cast<int>(groups.size());
        groups.emplace_back();
      }
      groups[static_cast<std::size_t>(root_to_group[static_cast<std::size_t>(r)])]
          .push_back(static_cast<int>(k));
    }
    return finalize(std::move(groups), n_z, n_y);
  }

  // Exact mode: adjacency matrix, then greedy clique growth in element order.
  std::vector<bool> adj(n * n, false);
  for (const auto& p : pairs) {
    if (!p.correlated) continue;
    const std::size_t a = index_of(p.a_row, p.a_col);
    const std::size_t b = index_of(p.b_row, p.b_col);
    adj[a * n + b] = adj[b * n + a] = true;
  }
  std::vector<std::vector<int>> groups;
  for (std::size_t k = 0; k < n; ++k) {
    bool placed = false;
    for (auto& g : groups) {
      bool all = true;
      for (int member : g) {
        if (!adj[k * n + static_cast<std::size_t>(member)]) {
          all = false;
          break;
        }
      }
      if (all) {
        g.push_back(static_cast<int>(k));
        placed = true;
        break;
      }
    }
    if (!placed) groups.push_back({static_cast<int>(k)});
  }
  return finalize(std::move(groups), n_z, n_y);
}

std::vector<double> column_internal_spread_deg(
    const steering::SteeringPlan& plan) {
  if (plan.codewords.empty()) {
    throw std::invalid_argument("column_internal_spread_deg: empty plan");
  }
  const int n_z = plan.codewords.front().n_z;
  const int n_y = plan.codewords.front().n_y;
  std::vector<double> spread(static_cast<std::size_t>(n_y), 0.0);
  for (const auto& cw : plan.codewords) {
    for (int col = 0; col < n_y; ++col) {
      double worst = spread[static_cast<std::size_t>(col)];
      for (int r1 = 0; r1 + 1 < n_z; ++r1) {
        for (int r2 = r1 + 1; r2 < n_z; ++r2) {
          worst = std::max(worst, circular_distance_deg(cw.at(r1, col),
                                                        cw.at(r2, col)));
        }
      }
      spread[static_cast<std::size_t>(col)] = worst;
    }
  }
  return spread;
}

ThresholdSweep threshold_sweep(const steering::SteeringPlan& plan,
                               const std::vector<double>& thresholds_deg) {
  if (!std::is_sorted(thresholds_deg.begin(), thresholds_deg.end())) {
    throw std::invalid_argument("threshold_sweep: thresholds must ascend");
  }
  const auto spread = column_internal_spread_deg(plan);
  ThresholdSweep out;
  out.thresholds_deg = thresholds_deg;
  out.correlated_columns.reserve(thresholds_deg.size());
  for (double t : thresholds_deg) {
    int count = 0;
    for (double s : spread) {
      if (s <= t) ++count;
    }
    out.correlated_columns.push_back(count);
  }
  return out;
}

ConnectedGroups column_groups(const steering::SteeringPlan& plan,
                              double psi_th_deg) {
  const int n_z = plan.codewords.front().n_z;
  const int n_y = plan.codewords.front().n_y;
  const auto spread = column_internal_spread_deg(plan);
  const auto col_pairs =
      correlate(pairwise_max_differences(plan, PairMode::ColumnPairs),
                psi_th_deg);

  std::vector<bool> cohesive(static_cast<std::size_t>(n_y));
  for (int c = 0; c < n_y; ++c) {
    cohesive[static_cast<std::size_t>(c)] =
        spread[static_cast<std::size_t>(c)] <= psi_th_deg;
  }
  std::vector<bool> adj(static_cast<std::size_t>(n_y) * n_y, false);
  for (const auto& p : col_pairs) {
    if (!p.correlated) continue;
    adj[static_cast<std::size_t>(p.a_col) * n_y + p.b_col] = true;
    adj[static_cast<std::size_t>(p.b_col) * n_y + p.a_col] = true;
  }

  // Greedy cliques over cohesive columns; others stay element-controlled.
  std::vector<std::vector<int>> col_cliques;
  std::vector<int> clique_of(static_cast<std::size_t>(n_y), -1);
  for (int c = 0; c < n_y; ++c) {
    if (!cohesive[static_cast<std::size_t>(c)]) continue;
    bool placed = false;
    for (std::size_t g = 0; g < col_cliques.size(); ++g) {
      bool all = true;
      for (int member : col_cliques[g]) {
        if (!adj[static_cast<std::size_t>(c) * n_y + member]) {
          all = false;
          break;
        }
      }
      if (all) {
        col_cliques[g].push_back(c);
        clique_of[static_cast<std::size_t>(c)] = static_cast<int>(g);
        placed = true;
        break;
      }
    }
    if (!placed) {
      clique_of[static_cast<std::size_t>(c)] = static_cast<int>(col_cliques.size());
      col_cliques.push_back({c});
    }
  }

  std::vector<std::vector<int>> groups(col_cliques.size());
  for (int col = 0; col < n_y; ++col) {
    const int g = clique_of[static_cast<std::size_t>(col)];
    for (int row = 0; row < n_z; ++row) {
      const int k = col * n_z + row;
      if (g >= 0) {
        groups[static_cast<std::size_t>(g)].push_back(k);
      } else {
        groups.push_back({k});
      }
    }
  }
  return finalize(std::move(groups), n_z, n_y);
}

ControlMapping connected_control_map(const ConnectedGroups& groups) {
  ControlMapping map;
  map.n_loads = groups.n_groups;
  map.n_dc_lines = groups.n_groups;
  map.independent_controls = groups.n_groups;
  map.paper_notation_count =
      static_cast<long>(groups.n_groups) * groups.n_groups;
  map.representatives = groups.representatives;
  return map;
}

}  // namespace riscorr::correlation
