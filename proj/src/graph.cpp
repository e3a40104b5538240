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

#include "layerrank/graph.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace layerrank {

namespace {

void check_node(const Graph& g, NodeId v) {
  if (v >= g.node_count()) {
    throw DomainError("node id " + std::to_string(v) + " out of range for graph with " +
                      std::to_string(g.node_count()) + " nodes");
  }
}

}  // namespace

std::span<const NodeId> Graph::neighbors(NodeId v) const {
  check_node(*this, v);
  return {neighbors_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

std::size_t Graph::degree(NodeId v) const {
  check_node(*this, v);
  return offsets_[v + 1] - offsets_[v];
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  auto nb = neighbors(u);
  check_node(*this, v);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<NodeId, NodeId>> Graph::edges() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  out.reserve(edge_count());
  for (NodeId u = 0; u < node_count(); ++u) {
    for (NodeId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

NodeId GraphBuilder::add_node() {
  return static_cast<NodeId>(node_count_++);
}

void GraphBuilder::add_edge(NodeId u, NodeId v) {
  if (u >= node_count_ || v >= node_count_) {
    throw DomainError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                      ") references a node outside [0, " + std::to_string(node_count_) + ")");
  }
  edges_.emplace_back(u, v);
}

Graph GraphBuilder::freeze() const {
  std::vector<std::pair<NodeId, NodeId>> arcs;
  arcs.reserve(edges_.size() * 2);
  for (auto [u, v] : edges_) {
    if (u == v) continue;
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

  Graph g;
  g.offsets_.assign(node_count_ + 1, 0);
  g.neighbors_.reserve(arcs.size());
  for (auto [u, v] : arcs) {
    ++g.offsets_[u + 1];
    g.neighbors_.push_back(v);
  }
  for (std::size_t i = 1; i < g.offsets_.size(); ++i) g.offsets_[i] += g.offsets_[i - 1];
  return g;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const NodeId> keep) {
  const std::size_t n = g.node_count();
  std::vector<char> kept(n, 0);
  for (NodeId v : keep) {
    check_node(g, v);
    kept[v] = 1;
  }

  InducedSubgraph out;
  out.ids.to_sub.assign(n, IdMap::kAbsent);
  for (NodeId v = 0; v < n; ++v) {
    if (!kept[v]) continue;
    out.ids.to_sub[v] = static_cast<std::int64_t>(out.ids.to_parent.size());
    out.ids.to_parent.push_back(v);
  }

  GraphBuilder builder(out.ids.to_parent.size());
  for (NodeId sub_u = 0; sub_u < out.ids.to_parent.size(); ++sub_u) {
    for (NodeId v : g.neighbors(out.ids.to_parent[sub_u])) {
      auto sub_v = out.ids.to_sub[v];
      if (sub_v != IdMap::kAbsent && sub_u < sub_v) {
        builder.add_edge(sub_u, static_cast<NodeId>(sub_v));
      }
    }
  }
  out.graph = builder.freeze();
  return out;
}

std::vector<std::vector<NodeId>> connected_components(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<NodeId>> components;
  std::vector<NodeId> stack;
  for (NodeId root = 0; root < n; ++root) {
    if (seen[root]) continue;
    auto& comp = components.emplace_back();
    seen[root] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      NodeId u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (NodeId v : g.neighbors(u)) {
        if (!seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
  }
  return components;
}

Graph read_edge_list(std::istream& in, std::size_t node_count) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  std::size_t max_id_plus_one = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      // write_edge_list records the node count so isolated tail nodes survive.
      std::istringstream header(line.substr(hash + 1));
      std::string key;
      std::size_t declared = 0;
      if (header >> key && key == "nodes" && header >> declared) {
        node_count = std::max(node_count, declared);
      }
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;
    long long u = -1, v = -1;
    std::string rest;
    std::istringstream(first) >> u;
    if (!(fields >> v) || (fields >> rest) || u < 0 || v < 0 ||
        u > std::numeric_limits<NodeId>::max() || v > std::numeric_limits<NodeId>::max() ||
        first.find_first_not_of("0123456789") != std::string::npos) {
      throw std::runtime_error("edge list line " + std::to_string(line_no) +
                               ": expected two non-negative integer ids");
    }
    edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
    max_id_plus_one = std::max<std::size_t>(max_id_plus_one, std::max(u, v) + 1);
  }
  GraphBuilder builder(std::max(node_count, max_id_plus_one));
  for (auto [u, v] : edges) builder.add_edge(u, v);
  return builder.freeze();
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << "# nodes " << g.node_count() << " edges " << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace layerrank
