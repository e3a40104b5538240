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

// Slow reference implementations used only by tests. They share no code
// with the library paths they check.

#ifndef LAYERRANK_TESTS_ORACLES_HPP_
#define LAYERRANK_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using AdjacencyMatrix = std::vector<std::vector<bool>>;

inline std::vector<int> bfs_distances(const AdjacencyMatrix& adj, int source) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> dist(n, -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w = 0; w < n; ++w) {
      if (adj[u][w] && dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

// Lists every shortest path from s to t as an explicit vertex sequence.
inline std::vector<std::vector<int>> all_shortest_paths(const AdjacencyMatrix& adj, int s, int t) {
  const auto dist = bfs_distances(adj, s);
  std::vector<std::vector<int>> paths;
  if (dist[t] < 0) return paths;
  std::vector<int> path{s};
  std::function<void(int)> extend = [&](int u) {
    if (u == t) {
      paths.push_back(path);
      return;
    }
    for (int w = 0; w < static_cast<int>(adj.size()); ++w) {
      if (adj[u][w] && dist[w] == dist[u] + 1 && dist[w] <= dist[t]) {
        path.push_back(w);
        extend(w);
        path.pop_back();
      }
    }
  };
  extend(s);
  return paths;
}

// Sum over unordered pairs {k, j} not containing v of
// (#shortest k-j paths through v) / (#shortest k-j paths).
inline std::vector<double> raw_betweenness(const AdjacencyMatrix& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<double> bc(n, 0.0);
  for (int k = 0; k < n; ++k) {
    for (int j = k + 1; j < n; ++j) {
      const auto paths = all_shortest_paths(adj, k, j);
      if (paths.empty()) continue;
      for (int v = 0; v < n; ++v) {
        if (v == k || v == j) continue;
        int through = 0;
        for (const auto& p : paths) through += std::count(p.begin(), p.end(), v) > 0;
        bc[v] += static_cast<double>(through) / static_cast<double>(paths.size());
      }
    }
  }
  return bc;
}

inline std::vector<double> betweenness(const AdjacencyMatrix& adj) {
  const double n = static_cast<double>(adj.size());
  auto bc = raw_betweenness(adj);
  for (double& x : bc) x *= 2.0 / ((n - 1.0) * (n - 2.0));
  return bc;
}

// Neighbour of x in c on the given side, or -1 at the boundary.
inline long long neighbour(const std::vector<int>& c, int x, int side) {
  const auto pos = std::find(c.begin(), c.end(), x) - c.begin();
  const long long at = pos + side;
  if (at < 0 || at >= static_cast<long long>(c.size())) return -1;
  return c[at];
}

inline int epsilon(const std::vector<int>& c1, const std::vector<int>& c2) {
  int total = 0;
  for (std::size_t i = 0; i < c1.size(); ++i) {
    if (c1[i] != c2[i]) ++total;
  }
  return total;
}

// The case table with the list boundary treated as an ordinary value.
inline double epsilon_n_symmetric(const std::vector<int>& c1, const std::vector<int>& c2) {
  double total = 0;
  for (int x : c1) {
    const bool p_diff = neighbour(c1, x, -1) != neighbour(c2, x, -1);
    const bool s_diff = neighbour(c1, x, +1) != neighbour(c2, x, +1);
    if (p_diff && s_diff) total += 1.0;
    else if (p_diff != s_diff) total += 0.5;
  }
  return total;
}

// The printed case table, evaluated top to bottom.
inline double epsilon_n_literal(const std::vector<int>& c1, const std::vector<int>& c2) {
  double total = 0;
  for (int x : c1) {
    const long long p1 = neighbour(c1, x, -1), p2 = neighbour(c2, x, -1);
    const long long s1 = neighbour(c1, x, +1), s2 = neighbour(c2, x, +1);
    if ((p1 == -1 && s1 != s2) || (s1 == -1 && p1 != p2) || (s1 != s2 && p1 != p2)) {
      total += 1.0;
    } else if ((s1 != s2 && p1 == p2) || (s1 == s2 && p1 != p2)) {
      total += 0.5;
    }
  }
  return total;
}

// Connected random graph: a random spanning tree plus extra edges with
// probability `extra`.
inline AdjacencyMatrix random_connected(int n, double extra, std::mt19937_64& rng) {
  AdjacencyMatrix adj(n, std::vector<bool>(n, false));
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  for (int i = 1; i < n; ++i) {
    const int parent = order[std::uniform_int_distribution<int>(0, i - 1)(rng)];
    adj[order[i]][parent] = adj[parent][order[i]] = true;
  }
  std::bernoulli_distribution coin(extra);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) adj[u][v] = adj[v][u] = true;
    }
  }
  return adj;
}

}  // namespace oracle

#endif  // LAYERRANK_TESTS_ORACLES_HPP_
