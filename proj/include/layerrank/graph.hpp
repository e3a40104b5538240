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

#ifndef LAYERRANK_GRAPH_HPP_
#define LAYERRANK_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "layerrank/errors.hpp"

namespace layerrank {

using NodeId = std::uint32_t;

// Immutable undirected simple graph over dense ids [0, node_count).
//
// Adjacency is stored in CSR form with each neighbor list sorted ascending,
// so iteration order is a pure function of the edge set.
class Graph {
 public:
  Graph() = default;

  std::size_t node_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return neighbors_.size() / 2; }

  std::span<const NodeId> neighbors(NodeId v) const;
  std::size_t degree(NodeId v) const;
  bool has_edge(NodeId u, NodeId v) const;

  // Each undirected edge once, as (u, v) with u < v, in ascending order.
  std::vector<std::pair<NodeId, NodeId>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> neighbors_;
};

// Edge-list accumulator. Tolerates self-loops and repeated edges in either
// orientation; freeze() drops both and produces a simple Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t node_count = 0) : node_count_(node_count) {}

  NodeId add_node();
  void add_edge(NodeId u, NodeId v);
  std::size_t node_count() const { return node_count_; }

  Graph freeze() const;

 private:
  std::size_t node_count_;
  std::vector<std::pair<NodeId, NodeId>> edges_;
};

// Mapping between ids of a graph and ids of a subgraph induced from it.
struct IdMap {
  std::vector<NodeId> to_parent;                 // subgraph id -> parent id
  std::vector<std::int64_t> to_sub;              // parent id -> subgraph id, or -1
  static constexpr std::int64_t kAbsent = -1;
};

struct InducedSubgraph {
  Graph graph;
  IdMap ids;
};

// Vertex-induced subgraph on `keep`, renumbered densely in ascending parent
// id order. Duplicates in `keep` are ignored.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const NodeId> keep);

// Components listed by smallest member; members ascending within each.
std::vector<std::vector<NodeId>> connected_components(const Graph& g);

// Edge-list text: one "u v" pair per line, '#' starts a comment.
// Node count is 1 + the largest id seen unless `node_count` is larger.
Graph read_edge_list(std::istream& in, std::size_t node_count = 0);
void write_edge_list(const Graph& g, std::ostream& out);

}  // namespace layerrank

#endif  // LAYERRANK_GRAPH_HPP_
