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

#include "layerrank/generators.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "layerrank/random.hpp"

namespace layerrank {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(message);
}

bool is_probability(double x) { return std::isfinite(x) && x >= 0.0 && x <= 1.0; }

// Draws a node with probability proportional to (degree + offset). `tokens`
// holds one entry per unit of degree, so a uniform token is a degree-biased
// node and the offset part is a uniform node.
NodeId draw_biased(Rng& rng, const std::vector<NodeId>& tokens, double offset,
                   std::size_t node_count) {
  const double token_mass = static_cast<double>(tokens.size());
  const double total = token_mass + offset * static_cast<double>(node_count);
  if (rng.uniform01() * total < token_mass) {
    return tokens[rng.below(tokens.size())];
  }
  return static_cast<NodeId>(rng.below(node_count));
}

}  // namespace

void ScaleFreeParams::validate() const {
  require(n >= 3, "scale_free.n must be at least 3 (got " + std::to_string(n) + ")");
  require(std::isfinite(alpha) && alpha >= 0.0, "scale_free.alpha must be >= 0");
  require(std::isfinite(beta) && beta >= 0.0, "scale_free.beta must be >= 0");
  require(std::isfinite(gamma) && gamma >= 0.0, "scale_free.gamma must be >= 0");
  require(std::abs(alpha + beta + gamma - 1.0) <= 1e-9,
          "scale_free: alpha + beta + gamma must equal 1 (got " +
              std::to_string(alpha + beta + gamma) + ")");
  require(alpha + gamma > 0.0, "scale_free: alpha + gamma must be positive or no node is ever added");
  require(std::isfinite(delta_in) && delta_in >= 0.0, "scale_free.delta_in must be >= 0");
  require(std::isfinite(delta_out) && delta_out >= 0.0, "scale_free.delta_out must be >= 0");
}

void SmallWorldParams::validate() const {
  require(k >= 2, "small_world.k must be at least 2 (got " + std::to_string(k) + ")");
  require(k % 2 == 0, "small_world.k must be even (got " + std::to_string(k) + ")");
  require(k < n, "small_world.k must be less than n (got k=" + std::to_string(k) +
                     ", n=" + std::to_string(n) + ")");
  require(is_probability(p), "small_world.p must lie in [0, 1]");
}

Graph generate_scale_free(const ScaleFreeParams& params) {
  params.validate();
  Rng rng(params.seed);

  // Endpoint multisets: every directed edge contributes its source to
  // `out_tokens` and its target to `in_tokens`.
  std::vector<NodeId> out_tokens{0};
  std::vector<NodeId> in_tokens{0};
  GraphBuilder builder(1);
  builder.add_edge(0, 0);

  auto add_arc = [&](NodeId from, NodeId to) {
    builder.add_edge(from, to);
    out_tokens.push_back(from);
    in_tokens.push_back(to);
  };

  while (builder.node_count() < params.n) {
    const double move = rng.uniform01();
    const std::size_t existing = builder.node_count();
    if (move < params.alpha) {
      NodeId to = draw_biased(rng, in_tokens, params.delta_in, existing);
      add_arc(builder.add_node(), to);
    } else if (move < params.alpha + params.beta) {
      NodeId from = draw_biased(rng, out_tokens, params.delta_out, existing);
      NodeId to = draw_biased(rng, in_tokens, params.delta_in, existing);
      add_arc(from, to);
    } else {
      NodeId from = draw_biased(rng, out_tokens, params.delta_out, existing);
      add_arc(from, builder.add_node());
    }
  }
  return builder.freeze();
}

Graph generate_small_world(const SmallWorldParams& params) {
  params.validate();
  Rng rng(params.seed);
  const std::size_t n = params.n;
  GraphBuilder builder(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t offset = 1; offset <= params.k / 2; ++offset) {
      builder.add_edge(static_cast<NodeId>(u), static_cast<NodeId>((u + offset) % n));
    }
  }
  if (params.p > 0.0) {
    const std::size_t lattice_edges = n * params.k / 2;
    for (std::size_t e = 0; e < lattice_edges; ++e) {
      if (!rng.bernoulli(params.p)) continue;
      auto a = static_cast<NodeId>(rng.below(n));
      auto b = static_cast<NodeId>(rng.below(n));
      builder.add_edge(a, b);
    }
  }
  return builder.freeze();
}

DegreeHistogram degree_histogram(const Graph& g) {
  DegreeHistogram hist;
  for (NodeId v = 0; v < g.node_count(); ++v) ++hist[g.degree(v)];
  return hist;
}

}  // namespace layerrank
