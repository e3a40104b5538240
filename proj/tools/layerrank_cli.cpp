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

// layerrank: sweep driver and access to the individual library pieces.
//
//   layerrank run <config|manifest.json> [--seed S] [--workers W] [--out-dir D]
//                 [--en-rule example|literal]
//   layerrank gen --family scale_free|small_world --n N [...] [--out FILE]
//   layerrank hist --family ... --n N [--graphs 3] --out FILE.svg
//   layerrank metrics BASELINE PERTURBED [--en-rule example|literal]
//
// Exit status: 0 success, 1 configuration error, 2 runtime error. Errors
// are reported on stderr as "layerrank: error[config|runtime]: message".

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "layerrank/centrality.hpp"
#include "layerrank/config.hpp"
#include "layerrank/experiment.hpp"
#include "layerrank/generators.hpp"
#include "layerrank/graph.hpp"
#include "layerrank/metrics.hpp"
#include "layerrank/random.hpp"
#include "layerrank/report.hpp"
#include "layerrank/svg.hpp"

namespace lr = layerrank;

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitRuntime = 2;

struct ModelFlags {
  std::string family = "scale_free";
  std::size_t n = 150;
  std::size_t k = 4;
  double p = 0.1;
  double alpha = 0.41, beta = 0.54, gamma = 0.05;
  double delta_in = 0.2, delta_out = 0.0;
  std::uint64_t seed = 1;

  void attach(CLI::App* cmd) {
    cmd->add_option("--family", family, "scale_free or small_world")
        ->check(CLI::IsMember({"scale_free", "small_world"}));
    cmd->add_option("--n", n, "node count");
    cmd->add_option("--k", k, "ring neighbours (small_world)");
    cmd->add_option("--p", p, "shortcut probability (small_world)");
    cmd->add_option("--alpha", alpha);
    cmd->add_option("--beta", beta);
    cmd->add_option("--gamma", gamma);
    cmd->add_option("--delta-in", delta_in);
    cmd->add_option("--delta-out", delta_out);
    cmd->add_option("--seed", seed, "generator seed");
  }

  lr::ModelSpec spec() const {
    lr::ModelSpec m;
    if (family == "scale_free") {
      m.family = lr::ModelFamily::kScaleFree;
      m.scale_free = {n, alpha, beta, gamma, delta_in, delta_out, 0};
    } else {
      m.family = lr::ModelFamily::kSmallWorld;
      m.small_world = {n, k, p, 0};
    }
    m.validate();
    return m;
  }
};

std::vector<lr::NodeId> read_ranking(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open ranking file");
  std::vector<lr::NodeId> out;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string token;
    while (fields >> token) {
      if (token.find_first_not_of("0123456789") != std::string::npos) {
        throw lr::ConfigError(path + ": '" + token + "' is not a node id");
      }
      out.push_back(static_cast<lr::NodeId>(std::stoul(token)));
    }
  }
  return out;
}

int run_sweep_command(const std::string& config_path, std::optional<std::uint64_t> seed,
                      std::size_t workers, std::optional<std::string> out_dir,
                      std::optional<std::string> en_rule) {
  const std::filesystem::path path(config_path);
  lr::SweepConfig config = path.extension() == ".json" ? lr::config_from_manifest(path)
                                                         : lr::parse_config(path);
  if (seed) config.base_seed = *seed;
  if (out_dir) config.out_dir = *out_dir;
  if (en_rule) config.rule = lr::parse_neighbor_rule(*en_rule);

  lr::RunManifest manifest;
  manifest.artifact_version = LAYERRANK_VERSION;
  manifest.started_at = lr::utc_timestamp();
  manifest.workers = workers;
  const lr::SweepResult result = lr::run_sweep(config, workers);
  manifest.finished_at = lr::utc_timestamp();
  manifest.config = config;
  manifest.cells = result.summary;
  manifest.identity_checks = result.identity_checks;
  manifest.round_trip_checked = result.round_trip_checked;

  const std::filesystem::path dir(config.out_dir);
  lr::write_trials_csv(result.records, dir / "trials.csv");
  lr::write_manifest(manifest, dir / "manifest.json");
  for (lr::CentralityKind kind : config.centralities) {
    const std::string name = std::string(lr::to_string(kind));
    lr::render_scatter(result.records, kind, dir / ("errors_" + name + ".svg"),
                       config.title + " (" + name + " centrality)");
  }

  std::printf("%-28s %-12s %7s %7s %9s %9s\n", "model", "centrality", "trials", "skipped",
              "eps_norm", "epsN_norm");
  for (const auto& c : result.summary) {
    std::printf("%-28s %-12s %7zu %7zu %9.3f %9.3f\n", c.model_label.c_str(),
                std::string(lr::to_string(c.centrality)).c_str(), c.trials, c.skipped,
                c.mean_epsilon, c.mean_epsilon_n);
  }
  std::printf("wrote %s\n", (dir / "trials.csv").string().c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Centrality-ranking perturbation experiments on layered random graphs"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  std::optional<std::string> out_dir;
  std::optional<std::string> en_rule;
  auto* run = app.add_subcommand("run", "run a sweep: trials CSV, plots and manifest");
  run->add_option("config", config_path, "sweep config, or a manifest.json to replay")
      ->required();
  run->add_option("--seed", seed, "override the base seed");
  run->add_option("--workers", workers, "worker threads (0 = all cores)");
  run->add_option("--out-dir", out_dir, "output directory");
  run->add_option("--en-rule", en_rule, "epsilon_N case rule")
      ->check(CLI::IsMember({"example", "literal"}));

  ModelFlags gen_flags;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "generate one graph and print its edge list");
  gen_flags.attach(gen);
  gen->add_option("--out", gen_out, "write to file instead of stdout");

  ModelFlags hist_flags;
  std::size_t hist_graphs = 3;
  std::string hist_out;
  auto* hist = app.add_subcommand("hist", "degree-frequency plot for a few seeds");
  hist_flags.attach(hist);
  hist->add_option("--graphs", hist_graphs, "number of graphs (1-3)")->check(CLI::Range(1, 3));
  hist->add_option("--out", hist_out, "SVG output path")->required();

  std::string baseline_path, perturbed_path;
  std::string metrics_rule = "example";
  auto* metrics = app.add_subcommand("metrics", "compare two ranking files");
  metrics->add_option("baseline", baseline_path)->required();
  metrics->add_option("perturbed", perturbed_path)->required();
  metrics->add_option("--en-rule", metrics_rule)->check(CLI::IsMember({"example", "literal"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*run) return run_sweep_command(config_path, seed, workers, out_dir, en_rule);
    if (*gen) {
      const lr::Graph g = gen_flags.spec().generate(gen_flags.seed);
      if (gen_out.empty()) {
        lr::write_edge_list(g, std::cout);
      } else {
        std::ofstream out(gen_out);
        if (!out) throw std::runtime_error(gen_out + ": cannot open for writing");
        lr::write_edge_list(g, out);
      }
      return 0;
    }
    if (*hist) {
      const lr::ModelSpec spec = hist_flags.spec();
      std::vector<lr::Graph> graphs;
      for (std::size_t i = 0; i < hist_graphs; ++i) {
        graphs.push_back(spec.generate(lr::derive_seed(hist_flags.seed, {i})));
      }
      lr::render_degree_histogram(graphs, hist_out, "Node frequency by degree, " + spec.label());
      return 0;
    }
    if (*metrics) {
      const auto baseline = read_ranking(baseline_path);
      const auto perturbed = read_ranking(perturbed_path);
      const lr::ErrorPair e =
          lr::error_pair(baseline, perturbed, lr::parse_neighbor_rule(metrics_rule));
      std::printf("eps_raw=%s epsN_raw=%s eps_norm=%s epsN_norm=%s\n",
                  lr::format_double(e.epsilon_raw).c_str(),
                  lr::format_double(e.epsilon_n_raw).c_str(),
                  lr::format_double(e.epsilon_norm).c_str(),
                  lr::format_double(e.epsilon_n_norm).c_str());
      return 0;
    }
  } catch (const lr::ConfigError& e) {
    std::fprintf(stderr, "layerrank: error[config]: %s\n", e.what());
    return kExitConfig;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "layerrank: error[runtime]: %s\n", e.what());
    return kExitRuntime;
  }
  return 0;
}
