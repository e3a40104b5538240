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

#ifndef LAYERRANK_CENTRALITY_HPP_
#define LAYERRANK_CENTRALITY_HPP_

#include <span>
#include <string_view>
#include <vector>

#include "layerrank/graph.hpp"

namespace layerrank {

enum class CentralityKind { kDegree, kBetweenness };

std::string_view to_string(CentralityKind kind);
// Accepts "degree" and "betweenness". Throws ConfigError otherwise.
CentralityKind parse_centrality_kind(std::string_view name);

// Per-node scores indexed by the NodeId of the graph they were computed on.
using ScoreVector = std::vector<double>;

// Node ids ordered by descending score, ties by ascending id.
using RankedList = std::vector<NodeId>;

// deg(v) / (n - 1). Requires n >= 2.
ScoreVector degree_centrality(const Graph& g);

// Exact unweighted betweenness, normalized by 2 / ((n - 1)(n - 2)) with n the
// node count of `g`. Pairs in different components contribute nothing; the
// normalization still uses the full n. Requires n >= 3.
//
// Brandes' single-source accumulation: one BFS per source counts shortest
// paths, then dependencies are propagated back in reverse BFS order. Sources
// are processed in ascending id order, so the result is reproducible bit for
// bit.
ScoreVector betweenness_centrality(const Graph& g);

ScoreVector centrality(const Graph& g, CentralityKind kind);

RankedList rank(std::span<const double> scores);

}  // namespace layerrank

#endif  // LAYERRANK_CENTRALITY_HPP_
