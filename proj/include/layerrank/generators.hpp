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

#ifndef LAYERRANK_GENERATORS_HPP_
#define LAYERRANK_GENERATORS_HPP_

#include <cstddef>
#include <cstdint>
#include <map>

#include "layerrank/graph.hpp"

namespace layerrank {

// Directed preferential-attachment growth model (Bollobas, Borgs, Chayes,
// Riordan). Each step picks one of three moves:
//   alpha: new node v, edge v -> w, w ~ in_degree + delta_in
//   beta:  edge v -> w between existing nodes, v ~ out_degree + delta_out,
//          w ~ in_degree + delta_in
//   gamma: new node w, edge v -> w, v ~ out_degree + delta_out
// Growth starts from one node carrying a self-loop and stops once n nodes
// exist.
struct ScaleFreeParams {
  std::size_t n = 150;
  double alpha = 0.41;
  double beta = 0.54;
  double gamma = 0.05;
  double delta_in = 0.2;
  double delta_out = 0.0;
  std::uint64_t seed = 0;

  // Throws ConfigError naming the violated constraint.
  void validate() const;
};

// Newman-Watts ring-with-shortcuts model. No edge is ever removed.
struct SmallWorldParams {
  std::size_t n = 150;
  std::size_t k = 4;  // ring neighbours per node, even
  double p = 0.1;     // shortcut probability per lattice edge
  std::uint64_t seed = 0;

  void validate() const;
};

// Directions, self-loops and parallel edges produced by the growth process
// are dropped in a single pass at the end.
Graph generate_scale_free(const ScaleFreeParams& params);

// Ring lattice where node u links to u +- 1 .. u +- k/2 (mod n). For every
// lattice edge, with probability p, one extra edge joins a uniformly drawn
// node pair; draws that hit a loop or an existing edge are discarded.
Graph generate_small_world(const SmallWorldParams& params);

using DegreeHistogram = std::map<std::size_t, std::size_t>;

DegreeHistogram degree_histogram(const Graph& g);

}  // namespace layerrank

#endif  // LAYERRANK_GENERATORS_HPP_
