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

#include "layerrank/centrality.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace layerrank {

std::string_view to_string(CentralityKind kind) {
  switch (kind) {
    case CentralityKind::kDegree:
      return "degree";
    case CentralityKind::kBetweenness:
      return "betweenness";
  }
  return "unknown";
}

CentralityKind parse_centrality_kind(std::string_view name) {
  if (name == "degree") return CentralityKind::kDegree;
  if (name == "betweenness") return CentralityKind::kBetweenness;
  throw ConfigError("unknown centrality '" + std::string(name) +
                    "' (expected degree or betweenness)");
}

ScoreVector degree_centrality(const Graph& g) {
  const std::size_t n = g.node_count();
  if (n < 2) throw DomainError("degree centrality needs at least 2 nodes");
  ScoreVector scores(n);
  const double scale = 1.0 / static_cast<double>(n - 1);
  for (NodeId v = 0; v < n; ++v) scores[v] = static_cast<double>(g.degree(v)) * scale;
  return scores;
}

ScoreVector betweenness_centrality(const Graph& g) {
  const std::size_t n = g.node_count();
  if (n < 3) throw DomainError("betweenness centrality needs at least 3 nodes");

  ScoreVector total(n, 0.0);
  std::vector<double> sigma(n);
  std::vector<double> delta(n);
  std::vector<std::int64_t> dist(n);
  std::vector<NodeId> order;  // BFS visitation order
  order.reserve(n);

  for (NodeId s = 0; s < n; ++s) {
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    std::fill(dist.begin(), dist.end(), -1);
    order.clear();

    sigma[s] = 1.0;
    dist[s] = 0;
    order.push_back(s);
    for (std::size_t head = 0; head < order.size(); ++head) {
      NodeId u = order[head];
      for (NodeId w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          order.push_back(w);
        }
        if (dist[w] == dist[u] + 1) sigma[w] += sigma[u];
      }
    }

    // Predecessors are recovered from distances instead of stored lists.
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      NodeId w = *it;
      for (NodeId u : g.neighbors(w)) {
        if (dist[u] == dist[w] - 1) delta[u] += sigma[u] / sigma[w] * (1.0 + delta[w]);
      }
      if (w != s) total[w] += delta[w];
    }
  }

  // Every unordered pair was counted from both endpoints.
  const double scale = 1.0 / (static_cast<double>(n - 1) * static_cast<double>(n - 2));
  for (double& x : total) x *= scale;
  return total;
}

ScoreVector centrality(const Graph& g, CentralityKind kind) {
  return kind == CentralityKind::kDegree ? degree_centrality(g) : betweenness_centrality(g);
}

RankedList rank(std::span<const double> scores) {
  RankedList order(scores.size());
  std::iota(order.begin(), order.end(), NodeId{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](NodeId a, NodeId b) { return scores[a] > scores[b]; });
  return order;
}

}  // namespace layerrank
