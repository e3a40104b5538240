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

#ifndef LAYERRANK_SVG_HPP_
#define LAYERRANK_SVG_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "layerrank/experiment.hpp"
#include "layerrank/graph.hpp"

namespace layerrank {

// Error scatter: one panel per model config found in `records` for `kind`,
// each plotting (p_B, eps_norm) and (p_B, epsN_norm). Axes span
// x in [0, max(0.3, largest p_B)] and y in [0, 1]. Throws DomainError when
// no record matches `kind`.
std::string scatter_svg(const std::vector<TrialRecord>& records, CentralityKind kind,
                        const std::string& title);
void render_scatter(const std::vector<TrialRecord>& records, CentralityKind kind,
                    const std::filesystem::path& path, const std::string& title);

// Overlaid node-frequency-by-degree series, one per graph (up to three).
std::string degree_histogram_svg(const std::vector<Graph>& graphs, const std::string& title);
void render_degree_histogram(const std::vector<Graph>& graphs, const std::filesystem::path& path,
                             const std::string& title);

}  // namespace layerrank

#endif  // LAYERRANK_SVG_HPP_
