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

#include "layerrank/experiment.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "layerrank/random.hpp"

namespace layerrank {

namespace {

std::size_t min_kept_nodes(CentralityKind kind) {
  return kind == CentralityKind::kDegree ? 2 : 3;
}

struct Moments {
  std::size_t count = 0;
  double sum = 0.0;
  double sum_sq = 0.0;

  void add(double x) {
    ++count;
    sum += x;
    sum_sq += x * x;
  }
  double mean() const { return count ? sum / static_cast<double>(count) : 0.0; }
  double sd() const {
    if (count < 2) return 0.0;
    const double m = mean();
    const double var = (sum_sq - static_cast<double>(count) * m * m) / static_cast<double>(count - 1);
    return var > 0.0 ? std::sqrt(var) : 0.0;
  }
};

// Runs body(i) for i in [0, count) on up to `workers` threads; the first
// exception thrown by any task is rethrown after all threads joined.
template <typename Body>
void parallel_for(std::size_t count, std::size_t workers, Body&& body) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, std::max<std::size_t>(count, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            body(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = count;
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

std::string_view to_string(ModelFamily family) {
  return family == ModelFamily::kScaleFree ? "scale_free" : "small_world";
}

std::size_t ModelSpec::node_count() const {
  return family == ModelFamily::kScaleFree ? scale_free.n : small_world.n;
}

std::string ModelSpec::label() const {
  if (family == ModelFamily::kScaleFree) return "scale-free n=" + std::to_string(scale_free.n);
  return "small-world n=" + std::to_string(small_world.n) + " k=" + std::to_string(small_world.k);
}

void ModelSpec::validate() const {
  if (family == ModelFamily::kScaleFree) {
    scale_free.validate();
  } else {
    small_world.validate();
  }
}

Graph ModelSpec::generate(std::uint64_t seed) const {
  if (family == ModelFamily::kScaleFree) {
    ScaleFreeParams params = scale_free;
    params.seed = seed;
    return generate_scale_free(params);
  }
  SmallWorldParams params = small_world;
  params.seed = seed;
  return generate_small_world(params);
}

LayerAssignment sample_layer(const Graph& g, double p_b, std::uint64_t seed) {
  if (!(p_b >= 0.0 && p_b <= 1.0)) throw DomainError("p_b must lie in [0, 1]");
  LayerAssignment layer{{}, p_b, seed};
  Rng rng(seed);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (rng.bernoulli(p_b)) layer.blue.push_back(v);
  }
  return layer;
}

std::optional<RankingComparison> compare_rankings(const Graph& g, const LayerAssignment& layer,
                                                  CentralityKind kind) {
  std::vector<char> is_blue(g.node_count(), 0);
  for (NodeId v : layer.blue) {
    if (v >= g.node_count()) throw DomainError("blue node outside graph");
    is_blue[v] = 1;
  }
  std::vector<NodeId> keep;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (!is_blue[v]) keep.push_back(v);
  }
  if (keep.size() < min_kept_nodes(kind)) return std::nullopt;

  InducedSubgraph sub = induced_subgraph(g, keep);
  RankingComparison out;
  out.baseline = rank(centrality(sub.graph, kind));
  out.baseline_disconnected = connected_components(sub.graph).size() > 1;

  const RankedList full = rank(centrality(g, kind));
  out.perturbed.reserve(keep.size());
  for (NodeId v : full) {
    if (auto mapped = sub.ids.to_sub[v]; mapped != IdMap::kAbsent) {
      out.perturbed.push_back(static_cast<NodeId>(mapped));
    }
  }
  return out;
}

TrialOutcome run_trial(const Graph& g, const LayerAssignment& layer, CentralityKind kind,
                       NeighborRule rule) {
  TrialOutcome outcome;
  auto comparison = compare_rankings(g, layer, kind);
  if (!comparison) {
    outcome.skip_reason = "only " + std::to_string(g.node_count() - layer.blue.size()) +
                          " nodes kept; " + std::string(to_string(kind)) + " needs " +
                          std::to_string(min_kept_nodes(kind));
    return outcome;
  }
  TrialRecord record;
  record.centrality = kind;
  record.p_b = layer.p_b;
  record.seed = layer.seed;
  record.n_kept = comparison->baseline.size();
  record.errors = error_pair(comparison->baseline, comparison->perturbed, rule);
  record.baseline_disconnected = comparison->baseline_disconnected;
  outcome.record = std::move(record);
  return outcome;
}

std::vector<double> PbGrid::points() const {
  std::vector<double> out;
  if (!(step > 0.0)) return out;
  for (std::size_t i = 0;; ++i) {
    const double p = start + static_cast<double>(i) * step;
    if (p > stop + 1e-9) break;
    out.push_back(std::min(p, 1.0));
  }
  return out;
}

std::string_view to_string(GraphMode mode) {
  return mode == GraphMode::kFresh ? "fresh" : "fixed";
}

GraphMode parse_graph_mode(std::string_view name) {
  if (name == "fresh") return GraphMode::kFresh;
  if (name == "fixed") return GraphMode::kFixed;
  throw ConfigError("unknown graph_mode '" + std::string(name) + "' (expected fresh or fixed)");
}

void SweepConfig::validate() const {
  if (models.empty()) throw ConfigError("config needs at least one [model] section");
  for (const auto& m : models) m.validate();
  if (centralities.empty()) throw ConfigError("centralities must list at least one kind");
  if (trials_per_point < 1) throw ConfigError("trials must be at least 1");
  if (!(grid.step > 0.0)) throw ConfigError("pb_step must be positive");
  if (!(grid.start >= 0.0 && grid.start <= 1.0)) throw ConfigError("pb_start must lie in [0, 1]");
  if (!(grid.stop >= grid.start && grid.stop <= 1.0)) {
    throw ConfigError("pb_stop must lie in [pb_start, 1]");
  }
}

std::uint64_t trial_seed(std::uint64_t base, std::size_t model, std::size_t point,
                         std::size_t trial) {
  return derive_seed(base, {0, model, point, trial});
}

std::uint64_t fixed_graph_seed(std::uint64_t base, std::size_t model) {
  return derive_seed(base, {1, model});
}

std::vector<CellSummary> summarize(const SweepConfig& config,
                                   const std::vector<TrialRecord>& records,
                                   const std::vector<std::size_t>& skips_per_cell) {
  const std::size_t kinds = config.centralities.size();
  std::vector<CellSummary> cells;
  std::vector<Moments> eps(config.models.size() * kinds);
  std::vector<Moments> eps_n(eps.size());
  std::vector<std::size_t> disconnected(eps.size(), 0);

  auto cell_of = [&](std::size_t model, CentralityKind kind) {
    for (std::size_t c = 0; c < kinds; ++c) {
      if (config.centralities[c] == kind) return model * kinds + c;
    }
    throw std::logic_error("record centrality not in config");
  };
  for (const auto& r : records) {
    const std::size_t cell = cell_of(r.model_index, r.centrality);
    eps[cell].add(r.errors.epsilon_norm);
    eps_n[cell].add(r.errors.epsilon_n_norm);
    disconnected[cell] += r.baseline_disconnected;
  }
  for (std::size_t m = 0; m < config.models.size(); ++m) {
    for (std::size_t c = 0; c < kinds; ++c) {
      const std::size_t cell = m * kinds + c;
      CellSummary s;
      s.model_index = m;
      s.model_label = config.models[m].label();
      s.centrality = config.centralities[c];
      s.trials = eps[cell].count;
      s.skipped = cell < skips_per_cell.size() ? skips_per_cell[cell] : 0;
      s.disconnected = disconnected[cell];
      s.mean_epsilon = eps[cell].mean();
      s.mean_epsilon_n = eps_n[cell].mean();
      s.sd_epsilon = eps[cell].sd();
      s.sd_epsilon_n = eps_n[cell].sd();
      cells.push_back(std::move(s));
    }
  }
  return cells;
}

std::vector<PointMean> point_means(const std::vector<TrialRecord>& records,
                                   std::size_t model_index, CentralityKind kind) {
  std::map<double, std::pair<Moments, Moments>> by_point;
  for (const auto& r : records) {
    if (r.model_index != model_index || r.centrality != kind) continue;
    auto& [e, en] = by_point[r.p_b];
    e.add(r.errors.epsilon_norm);
    en.add(r.errors.epsilon_n_norm);
  }
  std::vector<PointMean> out;
  for (const auto& [p, moments] : by_point) {
    out.push_back({p, moments.first.count, moments.first.mean(), moments.second.mean()});
  }
  return out;
}

SweepResult run_sweep(const SweepConfig& config, std::size_t workers) {
  config.validate();
  const auto points = config.grid.points();
  const std::size_t n_models = config.models.size();
  const std::size_t n_points = points.size();
  const std::size_t n_trials = config.trials_per_point;
  const std::size_t kinds = config.centralities.size();

  std::vector<Graph> fixed_graphs;
  if (config.graph_mode == GraphMode::kFixed) {
    for (std::size_t m = 0; m < n_models; ++m) {
      fixed_graphs.push_back(config.models[m].generate(fixed_graph_seed(config.base_seed, m)));
    }
  }

  // One work unit = one (model, point, trial): a single graph and layer
  // shared by every centrality kind.
  struct UnitResult {
    std::vector<TrialOutcome> outcomes;               // one per centrality
    std::vector<std::optional<RankingComparison>> kept;  // sampled for re-check
  };
  const std::size_t units = n_models * n_points * n_trials;
  std::vector<UnitResult> results(units);

  parallel_for(units, workers, [&](std::size_t unit) {
    const std::size_t m = unit / (n_points * n_trials);
    const std::size_t pt = (unit / n_trials) % n_points;
    const std::size_t t = unit % n_trials;
    const std::uint64_t seed = trial_seed(config.base_seed, m, pt, t);
    const Graph graph = config.graph_mode == GraphMode::kFixed
                            ? fixed_graphs[m]
                            : config.models[m].generate(derive_seed(seed, {0}));
    LayerAssignment layer = sample_layer(graph, points[pt], derive_seed(seed, {1}));
    layer.seed = seed;
    const bool sampled = mix64(seed) % 100 == 0;

    UnitResult& out = results[unit];
    for (CentralityKind kind : config.centralities) {
      auto comparison = compare_rankings(graph, layer, kind);
      TrialOutcome outcome;
      if (comparison) {
        TrialRecord r;
        r.model_index = m;
        r.model = config.models[m];
        r.centrality = kind;
        r.p_b = points[pt];
        r.seed = seed;
        r.n_kept = comparison->baseline.size();
        r.errors = error_pair(comparison->baseline, comparison->perturbed, config.rule);
        r.baseline_disconnected = comparison->baseline_disconnected;
        outcome.record = std::move(r);
      } else {
        outcome.skip_reason = "too few kept nodes";
      }
      out.outcomes.push_back(std::move(outcome));
      out.kept.push_back(sampled ? std::move(comparison) : std::nullopt);
    }
  });

  SweepResult result;
  std::vector<std::size_t> skips(n_models * kinds, 0);
  for (std::size_t m = 0; m < n_models; ++m) {
    for (std::size_t c = 0; c < kinds; ++c) {
      for (std::size_t pt = 0; pt < n_points; ++pt) {
        for (std::size_t t = 0; t < n_trials; ++t) {
          const UnitResult& unit = results[(m * n_points + pt) * n_trials + t];
          const TrialOutcome& outcome = unit.outcomes[c];
          if (!outcome.record) {
            ++skips[m * kinds + c];
            continue;
          }
          if (const auto& kept = unit.kept[c]) {
            const ErrorPair again = error_pair(kept->baseline, kept->perturbed, config.rule);
            if (!(again == outcome.record->errors)) {
              throw std::logic_error("stored rankings do not reproduce the recorded errors");
            }
            ++result.round_trip_checked;
          }
          result.records.push_back(*outcome.record);
        }
      }
    }
  }

  for (std::size_t m = 0; m < n_models; ++m) {
    const Graph graph = config.models[m].generate(derive_seed(config.base_seed, {2, m}));
    const LayerAssignment empty = sample_layer(graph, 0.0, 0);
    for (CentralityKind kind : config.centralities) {
      const TrialOutcome outcome = run_trial(graph, empty, kind, config.rule);
      IdentityCheck check{m, kind, {}, false};
      if (outcome.record) {
        check.errors = outcome.record->errors;
        check.passed = check.errors == ErrorPair{};
      }
      if (!check.passed) {
        throw std::logic_error("identity check failed for " + config.models[m].label() + " / " +
                               std::string(to_string(kind)));
      }
      result.identity_checks.push_back(check);
    }
  }

  result.summary = summarize(config, result.records, skips);
  return result;
}

}  // namespace layerrank
