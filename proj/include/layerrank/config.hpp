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

#ifndef LAYERRANK_CONFIG_HPP_
#define LAYERRANK_CONFIG_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "layerrank/experiment.hpp"

namespace layerrank {

// Sweep configuration files are line-oriented "key = value" text. '#'
// starts a comment. Top-level keys come first; each "[model]" header opens
// a model section.
//
// Top level (required): seed, trials, centralities, pb_start, pb_stop,
// pb_step. Optional: title, en_rule (example|literal), graph_mode
// (fresh|fixed), out_dir.
//
// [model] (required): family (scale_free|small_world), n. Scale-free
// sections may set alpha, beta, gamma, delta_in, delta_out; small-world
// sections must set k and may set p.
//
// Errors are ConfigError with "<source>:<line>: message" text.
SweepConfig parse_config_text(std::string_view text, const std::string& source = "<config>");
SweepConfig parse_config(const std::filesystem::path& path);

// Canonical text form with every default spelled out. Parsing it back gives
// an identical configuration.
std::string to_config_text(const SweepConfig& config);

// 17 significant digits ("%.17g"); parses back to the same double.
std::string format_double(double value);

}  // namespace layerrank

#endif  // LAYERRANK_CONFIG_HPP_
