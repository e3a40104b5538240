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

#include "layerrank/metrics.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace layerrank {

namespace {

constexpr std::int64_t kBoundary = -1;

void check_same_elements(std::span<const NodeId> a, std::span<const NodeId> b) {
  if (a.size() != b.size()) {
    throw DomainError("rankings differ in length (" + std::to_string(a.size()) + " vs " +
                      std::to_string(b.size()) + ")");
  }
  std::vector<NodeId> sa(a.begin(), a.end());
  std::vector<NodeId> sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (std::adjacent_find(sa.begin(), sa.end()) != sa.end()) {
    throw DomainError("ranking contains a repeated element");
  }
  if (sa != sb) throw DomainError("rankings are not permutations of the same element set");
}

struct Neighbors {
  std::int64_t pred = kBoundary;
  std::int64_t succ = kBoundary;
};

std::unordered_map<NodeId, Neighbors> neighbor_table(std::span<const NodeId> list) {
  std::unordered_map<NodeId, Neighbors> table;
  table.reserve(list.size());
  for (std::size_t i = 0; i < list.size(); ++i) {
    Neighbors nb;
    if (i > 0) nb.pred = list[i - 1];
    if (i + 1 < list.size()) nb.succ = list[i + 1];
    table.emplace(list[i], nb);
  }
  return table;
}

}  // namespace

std::string_view to_string(NeighborRule rule) {
  return rule == NeighborRule::kSymmetric ? "example" : "literal";
}

NeighborRule parse_neighbor_rule(std::string_view name) {
  if (name == "example") return NeighborRule::kSymmetric;
  if (name == "literal") return NeighborRule::kLiteral;
  throw ConfigError("unknown e_N rule '" + std::string(name) + "' (expected example or literal)");
}

double epsilon(std::span<const NodeId> baseline, std::span<const NodeId> perturbed) {
  check_same_elements(baseline, perturbed);
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < baseline.size(); ++i) mismatches += baseline[i] != perturbed[i];
  return static_cast<double>(mismatches);
}

double epsilon_n(std::span<const NodeId> baseline, std::span<const NodeId> perturbed,
                 NeighborRule rule) {
  check_same_elements(baseline, perturbed);
  const auto before = neighbor_table(baseline);
  const auto after = neighbor_table(perturbed);

  // Accumulate in half units so the sum is exact.
  std::size_t halves = 0;
  for (NodeId x : baseline) {
    const Neighbors& b = before.at(x);
    const Neighbors& a = after.at(x);
    const bool pred_changed = b.pred != a.pred;
    const bool succ_changed = b.succ != a.succ;
    if (pred_changed && succ_changed) {
      halves += 2;
    } else if (rule == NeighborRule::kLiteral &&
               ((b.pred == kBoundary && succ_changed) || (b.succ == kBoundary && pred_changed))) {
      halves += 2;
    } else if (pred_changed || succ_changed) {
      halves += 1;
    }
  }
  return static_cast<double>(halves) / 2.0;
}

ErrorPair error_pair(std::span<const NodeId> baseline, std::span<const NodeId> perturbed,
                     NeighborRule rule) {
  if (baseline.empty()) throw DomainError("error measures need rankings of length >= 1");
  ErrorPair out;
  out.epsilon_raw = epsilon(baseline, perturbed);
  out.epsilon_n_raw = epsilon_n(baseline, perturbed, rule);
  const double length = static_cast<double>(baseline.size());
  out.epsilon_norm = out.epsilon_raw / length;
  out.epsilon_n_norm = out.epsilon_n_raw / length;
  return out;
}

}  // namespace layerrank
