// Copyright 2026 The layerrank Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance suite. Runs the table sweeps and the oracle checks and prints
// one PASS/FAIL line per criterion.
//
//   acceptance            run every criterion
//   acceptance 1 5        run only criteria 1 and 5
//
// Exit status is 0 only when every selected criterion passed.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "layerrank/centrality.hpp"
#include "layerrank/config.hpp"
#include "layerrank/experiment.hpp"
#include "layerrank/metrics.hpp"
#include "layerrank/report.hpp"
#include "oracles.hpp"
#include "test_graphs.hpp"

namespace lr = layerrank;

namespace {

const std::string kFixtures = LAYERRANK_FIXTURE_DIR;

struct Target {
  double epsilon;
  double epsilon_n;
};

// Published cell means, in fixture model order: scale-free n = 150, 300,
// 500, then small-world n = 150 with k = 4, 8, 50.
const std::vector<Target> kDegreeTargets = {{0.95, 0.46}, {0.97, 0.47}, {0.98, 0.48},
                                     {0.97, 0.97}, {0.97, 0.96}, {0.95, 0.96}};
const std::vector<Target> kBetweennessTargets = {{0.77, 0.23}, {0.87, 0.27}, {0.91, 0.29},
                                     {0.94, 0.92}, {0.94, 0.92}, {0.94, 0.93}};
constexpr double kDegreeTolerance = 0.05;
constexpr double kBetweennessTolerance = 0.07;

constexpr double kScaleFreeDegreeEpsNLow = 0.35;
constexpr double kScaleFreeDegreeEpsNHigh = 0.60;
constexpr double kPlateauStart = 0.05;
constexpr double kPlateauMaxSpread = 0.10;
constexpr double kBetweennessOracleTolerance = 1e-9;
constexpr int kOracleGraphs = 500;

constexpr std::size_t kWorkers = 4;

int workers_for_tables() {
  if (const char* w = std::getenv("LAYERRANK_WORKERS")) return std::max(1, std::atoi(w));
  return static_cast<int>(kWorkers);
}

std::string sweep_fixture(int table) {
  return kFixtures + (table == 1 ? "/degree-sweep.cfg" : "/betweenness-sweep.cfg");
}

// Sweep results are shared between criteria, computed on first use.
const lr::SweepResult& table_sweep(int table) {
  static std::map<int, lr::SweepResult> cache;
  auto it = cache.find(table);
  if (it == cache.end()) {
    const auto config =
        lr::parse_config(sweep_fixture(table));
    it = cache.emplace(table, lr::run_sweep(config, workers_for_tables())).first;
  }
  return it->second;
}

bool check_table(int table, const std::vector<Target>& targets, double tolerance) {
  const auto& result = table_sweep(table);
  bool ok = true;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const auto& cell = result.summary.at(i);
    const double d_eps = std::abs(cell.mean_epsilon - targets[i].epsilon);
    const double d_eps_n = std::abs(cell.mean_epsilon_n - targets[i].epsilon_n);
    const bool cell_ok = d_eps <= tolerance && d_eps_n <= tolerance && cell.trials >= 30 * 30;
    ok = ok && cell_ok;
    std::printf("    %-24s %-11s eps %.3f (target %.2f, |d| %.3f)  epsN %.3f (target %.2f, |d| %.3f)  %s\n",
                cell.model_label.c_str(), std::string(lr::to_string(cell.centrality)).c_str(),
                cell.mean_epsilon, targets[i].epsilon, d_eps, cell.mean_epsilon_n,
                targets[i].epsilon_n, d_eps_n, cell_ok ? "ok" : "OUT OF TOLERANCE");
  }
  return ok;
}

std::vector<double> average_ranks(const std::vector<double>& xs) {
  std::vector<std::size_t> idx(xs.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return xs[a] < xs[b]; });
  std::vector<double> ranks(xs.size());
  for (std::size_t i = 0; i < idx.size();) {
    std::size_t j = i;
    while (j + 1 < idx.size() && xs[idx[j + 1]] == xs[idx[i]]) ++j;
    for (std::size_t k = i; k <= j; ++k) ranks[idx[k]] = (i + j) / 2.0 + 1.0;
    i = j + 1;
  }
  return ranks;
}

double spearman(const std::vector<double>& xs, const std::vector<double>& ys) {
  const auto rx = average_ranks(xs);
  const auto ry = average_ranks(ys);
  const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / rx.size();
  const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / ry.size();
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

bool criterion_degree_means() { return check_table(1, kDegreeTargets, kDegreeTolerance); }
bool criterion_betweenness_means() { return check_table(2, kBetweennessTargets, kBetweennessTolerance); }

bool criterion_shapes() {
  bool ok = true;
  const auto& degree = table_sweep(1);
  const auto& betweenness = table_sweep(2);

  // (a) scale-free degree epsN per-p_B means stay in the band.
  for (std::size_t m = 0; m < 3; ++m) {
    const auto means = lr::point_means(degree.records, m, lr::CentralityKind::kDegree);
    double lo = 1, hi = 0;
    for (const auto& p : means) {
      lo = std::min(lo, p.mean_epsilon_n);
      hi = std::max(hi, p.mean_epsilon_n);
    }
    const bool part = lo >= kScaleFreeDegreeEpsNLow && hi <= kScaleFreeDegreeEpsNHigh;
    ok = ok && part;
    std::printf("    (a) %-24s degree epsN per-p_B means in [%.3f, %.3f], band [%.2f, %.2f]  %s\n",
                degree.summary[m].model_label.c_str(), lo, hi, kScaleFreeDegreeEpsNLow,
                kScaleFreeDegreeEpsNHigh, part ? "ok" : "FAIL");
  }

  // (b) small-world means are flat once p_B >= 0.05.
  for (const auto* result : {&degree, &betweenness}) {
    for (std::size_t m = 3; m < 6; ++m) {
      const auto kind = result->summary.at(m).centrality;
      const auto means = lr::point_means(result->records, m, kind);
      double lo_e = 1, hi_e = 0, lo_n = 1, hi_n = 0;
      for (const auto& p : means) {
        if (p.p_b < kPlateauStart - 1e-12) continue;
        lo_e = std::min(lo_e, p.mean_epsilon);
        hi_e = std::max(hi_e, p.mean_epsilon);
        lo_n = std::min(lo_n, p.mean_epsilon_n);
        hi_n = std::max(hi_n, p.mean_epsilon_n);
      }
      const bool part = hi_e - lo_e <= kPlateauMaxSpread && hi_n - lo_n <= kPlateauMaxSpread;
      ok = ok && part;
      std::printf("    (b) %-24s %-11s spread for p_B >= %.2f: eps %.3f, epsN %.3f (max %.2f)  %s\n",
                  result->summary[m].model_label.c_str(), std::string(lr::to_string(kind)).c_str(),
                  kPlateauStart, hi_e - lo_e, hi_n - lo_n, kPlateauMaxSpread, part ? "ok" : "FAIL");
    }
  }

  // (c) scale-free betweenness epsN rises with p_B.
  for (std::size_t m = 0; m < 3; ++m) {
    const auto means = lr::point_means(betweenness.records, m, lr::CentralityKind::kBetweenness);
    std::vector<double> xs, ys;
    for (const auto& p : means) {
      xs.push_back(p.p_b);
      ys.push_back(p.mean_epsilon_n);
    }
    const double rho = spearman(xs, ys);
    const bool part = rho > 0.0;
    ok = ok && part;
    std::printf("    (c) %-24s betweenness epsN vs p_B Spearman rho %.3f (> 0)  %s\n",
                betweenness.summary[m].model_label.c_str(), rho, part ? "ok" : "FAIL");
  }
  return ok;
}

bool criterion_metric_oracle() {
  using List = std::vector<lr::NodeId>;
  const List c1{1, 2, 3, 4, 5}, c2{5, 3, 2, 1, 4}, c3{1, 5, 2, 3, 4};
  bool ok = lr::epsilon(c1, c2) == 5 && lr::epsilon_n(c1, c2) == 5 && lr::epsilon(c1, c3) == 4 &&
            lr::epsilon_n(c1, c3) == 2.5;
  std::printf("    worked example: eps(c1,c2)=%g epsN(c1,c2)=%g eps(c1,c3)=%g epsN(c1,c3)=%g  %s\n",
              lr::epsilon(c1, c2), lr::epsilon_n(c1, c2), lr::epsilon(c1, c3),
              lr::epsilon_n(c1, c3), ok ? "ok" : "FAIL");

  std::size_t pairs = 0, mismatches = 0;
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> base(n);
    std::iota(base.begin(), base.end(), 0);
    std::vector<std::vector<int>> perms;
    do perms.push_back(base);
    while (std::next_permutation(base.begin(), base.end()));
    for (const auto& a : perms) {
      const List la(a.begin(), a.end());
      for (const auto& b : perms) {
        const List lb(b.begin(), b.end());
        ++pairs;
        if (lr::epsilon(la, lb) != oracle::epsilon(a, b) ||
            lr::epsilon_n(la, lb) != oracle::epsilon_n_symmetric(a, b) ||
            lr::epsilon_n(la, lb, lr::NeighborRule::kLiteral) != oracle::epsilon_n_literal(a, b)) {
          ++mismatches;
        }
      }
    }
  }
  std::printf("    exhaustive n <= 6: %zu permutation pairs, %zu mismatches\n", pairs, mismatches);
  return ok && mismatches == 0;
}

bool criterion_betweenness_oracle() {
  std::mt19937_64 rng(500);
  double worst = 0;
  for (int g = 0; g < kOracleGraphs; ++g) {
    const int n = 3 + static_cast<int>(rng() % 8);
    const double density = std::uniform_real_distribution<double>(0.0, 0.7)(rng);
    const auto adj = oracle::random_connected(n, density, rng);
    const auto expected = oracle::betweenness(adj);
    const auto got = lr::betweenness_centrality(testgraphs::from_matrix(adj));
    for (int v = 0; v < n; ++v) worst = std::max(worst, std::abs(got[v] - expected[v]));
  }
  const auto p3 = lr::betweenness_centrality(testgraphs::path(3));
  const auto star = lr::betweenness_centrality(testgraphs::star(4));
  const bool closed = p3[1] == 1.0 && p3[0] == 0.0 && p3[2] == 0.0 &&
                      std::abs(star[0] - 1.0) <= kBetweennessOracleTolerance && star[1] == 0.0;
  std::printf("    %d random connected graphs (n <= 10): max |diff| %.3g (tol %.0e); P3 centre %.17g, star centre %.17g\n",
              kOracleGraphs, worst, kBetweennessOracleTolerance, p3[1], star[0]);
  return worst <= kBetweennessOracleTolerance && closed;
}

bool criterion_determinism() {
  const auto config = lr::parse_config(kFixtures + "/degree-sweep.cfg");
  std::ostringstream a, b;
  lr::write_trials_csv(lr::run_sweep(config, 1).records, a);
  lr::write_trials_csv(lr::run_sweep(config, 4).records, b);
  const bool same = a.str() == b.str();
  std::printf("    table-1 fixture, workers 1 vs 4: %zu vs %zu bytes, %s\n", a.str().size(),
              b.str().size(), same ? "identical" : "DIFFERENT");
  return same;
}

bool criterion_identity() {
  std::size_t trials = 0, nonzero = 0;
  for (int table : {1, 2}) {
    auto config =
        lr::parse_config(sweep_fixture(table));
    config.grid = {0.0, 0.0, 0.01};
    const auto result = lr::run_sweep(config, workers_for_tables());
    for (const auto& r : result.records) {
      ++trials;
      if (r.errors.epsilon_norm != 0.0 || r.errors.epsilon_n_norm != 0.0) ++nonzero;
    }
    for (const auto& c : result.identity_checks) {
      ++trials;
      if (!c.passed) ++nonzero;
    }
  }
  std::printf("    %zu p_B = 0 trials, %zu with nonzero error\n", trials, nonzero);
  return trials > 0 && nonzero == 0;
}

struct Criterion {
  int id;
  const char* name;
  std::function<bool()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "degree sweep cell means within 0.05", criterion_degree_means},
      {2, "betweenness sweep cell means within 0.07", criterion_betweenness_means},
      {3, "qualitative shape checks", criterion_shapes},
      {4, "metric oracle equivalence", criterion_metric_oracle},
      {5, "betweenness oracle equivalence", criterion_betweenness_oracle},
      {6, "determinism across worker counts", criterion_determinism},
      {7, "identity at p_B = 0", criterion_identity},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  bool all_ok = true;
  for (const auto& c : criteria) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    bool ok = false;
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      std::printf("    exception: %s\n", e.what());
    }
    std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", c.id, c.name);
    std::fflush(stdout);
    all_ok = all_ok && ok;
  }
  return all_ok ? 0 : 1;
}
