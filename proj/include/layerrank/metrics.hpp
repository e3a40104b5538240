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

#ifndef LAYERRANK_METRICS_HPP_
#define LAYERRANK_METRICS_HPP_

#include <span>
#include <string_view>

#include "layerrank/graph.hpp"

namespace layerrank {

// How a ranking-neighbour change is scored in epsilon_n.
//
// kSymmetric treats the list boundary as an ordinary neighbour value: an
// element scores 1 when both its predecessor and successor changed, 1/2 when
// exactly one changed, 0 otherwise. This reproduces the published worked
// example (eps_N([1,2,3,4,5], [1,5,2,3,4]) = 2.5).
//
// kLiteral follows the printed piecewise case table, which scores 1 for a
// boundary element of the baseline whose single inner neighbour changed
// (the same pair then yields 3).
enum class NeighborRule { kSymmetric, kLiteral };

std::string_view to_string(NeighborRule rule);
// "example" selects kSymmetric, "literal" selects kLiteral.
NeighborRule parse_neighbor_rule(std::string_view name);

// Number of positions holding different elements (permutation Hamming
// distance). Throws DomainError unless both lists are permutations of the
// same element set.
double epsilon(std::span<const NodeId> baseline, std::span<const NodeId> perturbed);

// Sum over elements of the per-element neighbour-change score.
double epsilon_n(std::span<const NodeId> baseline, std::span<const NodeId> perturbed,
                 NeighborRule rule = NeighborRule::kSymmetric);

struct ErrorPair {
  double epsilon_raw = 0.0;
  double epsilon_n_raw = 0.0;
  double epsilon_norm = 0.0;    // epsilon_raw / length
  double epsilon_n_norm = 0.0;  // epsilon_n_raw / length

  friend bool operator==(const ErrorPair&, const ErrorPair&) = default;
};

// Both measures plus their per-element normalization. Length must be >= 1.
ErrorPair error_pair(std::span<const NodeId> baseline, std::span<const NodeId> perturbed,
                     NeighborRule rule = NeighborRule::kSymmetric);

}  // namespace layerrank

#endif  // LAYERRANK_METRICS_HPP_
