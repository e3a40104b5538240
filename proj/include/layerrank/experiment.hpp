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

#ifndef LAYERRANK_EXPERIMENT_HPP_
#define LAYERRANK_EXPERIMENT_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "layerrank/centrality.hpp"
#include "layerrank/generators.hpp"
#include "layerrank/graph.hpp"
#include "layerrank/metrics.hpp"

namespace layerrank {

enum class ModelFamily { kScaleFree, kSmallWorld };

std::string_view to_string(ModelFamily family);

// A random-graph family plus its parameters. The seed fields inside the
// params are ignored; seeds come from the sweep's stream-splitting rule.
struct ModelSpec {
  ModelFamily family = ModelFamily::kScaleFree;
  ScaleFreeParams scale_free;
  SmallWorldParams small_world;

  std::size_t node_count() const;
  // Short human label, e.g. "scale-free n=150" or "small-world n=150 k=8".
  std::string label() const;
  void validate() const;
  Graph generate(std::uint64_t seed) const;
};

// The blue nodes B of one trial, ascending.
struct LayerAssignment {
  std::vector<NodeId> blue;
  double p_b = 0.0;
  std::uint64_t seed = 0;
};

// Independent Bernoulli(p_b) mark per node, visited in ascending id order.
LayerAssignment sample_layer(const Graph& g, double p_b, std::uint64_t seed);

// The two rankings compared by a trial, both over subgraph ids of V \ B.
struct RankingComparison {
  RankedList baseline;   // ranking on the induced subgraph G_B
  RankedList perturbed;  // ranking on G, restricted to V \ B, in G_B ids
  bool baseline_disconnected = false;
};

// Returns std::nullopt when too few nodes survive for `kind` (fewer than 2
// for degree, fewer than 3 for betweenness).
std::optional<RankingComparison> compare_rankings(const Graph& g, const LayerAssignment& layer,
                                                  CentralityKind kind);

struct TrialRecord {
  std::size_t model_index = 0;
  ModelSpec model;
  CentralityKind centrality = CentralityKind::kDegree;
  double p_b = 0.0;
  std::uint64_t seed = 0;  // trial seed; graph and layer seeds derive from it
  std::size_t n_kept = 0;
  ErrorPair errors;
  bool baseline_disconnected = false;
};

struct TrialOutcome {
  std::optional<TrialRecord> record;
  std::string skip_reason;  // set iff record is empty
};

TrialOutcome run_trial(const Graph& g, const LayerAssignment& layer, CentralityKind kind,
                       NeighborRule rule = NeighborRule::kSymmetric);

// Evenly spaced p_B values start, start + step, ... up to stop (inclusive,
// with 1e-9 slack). Points are computed as start + i * step.
struct PbGrid {
  double start = 0.01;
  double stop = 0.30;
  double step = 0.01;

  std::vector<double> points() const;
};

enum class GraphMode {
  kFresh,  // new graph for every trial
  kFixed,  // one graph per model, only the layer is resampled
};

std::string_view to_string(GraphMode mode);
GraphMode parse_graph_mode(std::string_view name);

struct SweepConfig {
  std::string title = "centrality perturbation sweep";
  std::vector<ModelSpec> models;
  std::vector<CentralityKind> centralities;
  PbGrid grid;
  std::size_t trials_per_point = 30;
  std::uint64_t base_seed = 1;
  NeighborRule rule = NeighborRule::kSymmetric;
  GraphMode graph_mode = GraphMode::kFresh;
  std::string out_dir = "out";

  // Throws ConfigError naming the first violated constraint.
  void validate() const;
};

// Seed of trial `trial` at grid point `point` of model `model`. The graph
// is generated from derive_seed(trial_seed, {0}) and the layer is sampled
// from derive_seed(trial_seed, {1}); in fixed-graph mode the graph seed is
// fixed_graph_seed(base, model) instead.
std::uint64_t trial_seed(std::uint64_t base, std::size_t model, std::size_t point,
                         std::size_t trial);
std::uint64_t fixed_graph_seed(std::uint64_t base, std::size_t model);

struct CellSummary {
  std::size_t model_index = 0;
  std::string model_label;
  CentralityKind centrality = CentralityKind::kDegree;
  std::size_t trials = 0;
  std::size_t skipped = 0;
  std::size_t disconnected = 0;
  double mean_epsilon = 0.0;
  double mean_epsilon_n = 0.0;
  double sd_epsilon = 0.0;
  double sd_epsilon_n = 0.0;
};

struct IdentityCheck {
  std::size_t model_index = 0;
  CentralityKind centrality = CentralityKind::kDegree;
  ErrorPair errors;
  bool passed = false;
};

struct SweepResult {
  std::vector<TrialRecord> records;  // ordered by model, centrality, p_B, trial
  std::vector<CellSummary> summary;  // ordered by model, centrality
  std::vector<IdentityCheck> identity_checks;
  std::size_t round_trip_checked = 0;
};

// Runs every (model, centrality, p_B, trial) combination on `workers`
// threads (0 = hardware concurrency). Output is independent of `workers`.
// Also runs one p_B = 0 identity trial per cell and recomputes the error
// pair of roughly 1% of trials from their stored rankings; either check
// failing throws std::logic_error.
SweepResult run_sweep(const SweepConfig& config, std::size_t workers = 1);

// Mean and sample standard deviation per cell over the given records.
std::vector<CellSummary> summarize(const SweepConfig& config,
                                   const std::vector<TrialRecord>& records,
                                   const std::vector<std::size_t>& skips_per_cell);

struct PointMean {
  double p_b = 0.0;
  std::size_t trials = 0;
  double mean_epsilon = 0.0;
  double mean_epsilon_n = 0.0;
};

// Per-p_B means of one cell, ascending in p_B.
std::vector<PointMean> point_means(const std::vector<TrialRecord>& records,
                                   std::size_t model_index, CentralityKind kind);

}  // namespace layerrank

#endif  // LAYERRANK_EXPERIMENT_HPP_
