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

#include "layerrank/config.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace layerrank {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

struct Entry {
  std::string value;
  std::size_t line = 0;
};

using Section = std::map<std::string, Entry>;

class Parser {
 public:
  explicit Parser(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void fail(std::size_t line, const std::string& message) const {
    throw ConfigError(source_ + ":" + std::to_string(line) + ": " + message);
  }

  double number(const Section& s, const std::string& key, std::size_t section_line) const {
    const Entry& e = require(s, key, section_line);
    const char* begin = e.value.c_str();
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0' || errno == ERANGE) {
      fail(e.line, key + ": expected a number, got '" + e.value + "'");
    }
    return v;
  }

  std::uint64_t integer(const Section& s, const std::string& key, std::size_t section_line) const {
    const Entry& e = require(s, key, section_line);
    if (e.value.empty() || e.value.find_first_not_of("0123456789") != std::string::npos) {
      fail(e.line, key + ": expected a non-negative integer, got '" + e.value + "'");
    }
    errno = 0;
    const unsigned long long v = std::strtoull(e.value.c_str(), nullptr, 10);
    if (errno == ERANGE) fail(e.line, key + ": value out of range");
    return v;
  }

  const Entry& require(const Section& s, const std::string& key, std::size_t section_line) const {
    auto it = s.find(key);
    if (it == s.end()) fail(section_line, "missing required key '" + key + "'");
    return it->second;
  }

  // Runs a validation step, re-labelling its ConfigError with `line`.
  template <typename F>
  void checked(std::size_t line, F&& step) const {
    try {
      step();
    } catch (const ConfigError& e) {
      fail(line, e.what());
    }
  }

 private:
  std::string source_;
};

const std::set<std::string> kTopKeys = {"title",    "seed",    "trials",  "centralities",
                                        "pb_start", "pb_stop", "pb_step", "en_rule",
                                        "graph_mode", "out_dir"};
const std::set<std::string> kRequiredTopKeys = {"seed",     "trials",  "centralities",
                                                "pb_start", "pb_stop", "pb_step"};
const std::set<std::string> kScaleFreeKeys = {"family", "n",        "alpha",    "beta",
                                              "gamma",  "delta_in", "delta_out"};
const std::set<std::string> kSmallWorldKeys = {"family", "n", "k", "p"};

ModelSpec parse_model(const Parser& parser, const Section& s, std::size_t line) {
  ModelSpec model;
  const std::string family = parser.require(s, "family", line).value;
  const std::set<std::string>* allowed = nullptr;
  if (family == "scale_free") {
    model.family = ModelFamily::kScaleFree;
    allowed = &kScaleFreeKeys;
  } else if (family == "small_world") {
    model.family = ModelFamily::kSmallWorld;
    allowed = &kSmallWorldKeys;
  } else {
    parser.fail(s.at("family").line,
                "family: expected scale_free or small_world, got '" + family + "'");
  }
  for (const auto& [key, entry] : s) {
    if (!allowed->count(key)) parser.fail(entry.line, "unknown key '" + key + "' for " + family);
  }

  const std::size_t n = parser.integer(s, "n", line);
  if (model.family == ModelFamily::kScaleFree) {
    auto& p = model.scale_free;
    p.n = n;
    if (s.count("alpha")) p.alpha = parser.number(s, "alpha", line);
    if (s.count("beta")) p.beta = parser.number(s, "beta", line);
    if (s.count("gamma")) p.gamma = parser.number(s, "gamma", line);
    if (s.count("delta_in")) p.delta_in = parser.number(s, "delta_in", line);
    if (s.count("delta_out")) p.delta_out = parser.number(s, "delta_out", line);
  } else {
    auto& p = model.small_world;
    p.n = n;
    p.k = parser.integer(s, "k", line);
    if (s.count("p")) p.p = parser.number(s, "p", line);
  }
  parser.checked(line, [&] { model.validate(); });
  return model;
}

}  // namespace

std::string format_double(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

SweepConfig parse_config_text(std::string_view text, const std::string& source) {
  Parser parser(source);
  Section top;
  std::vector<std::pair<std::size_t, Section>> model_sections;
  Section* current = &top;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line != "[model]") parser.fail(line_no, "unknown section '" + line + "'");
      model_sections.emplace_back(line_no, Section{});
      current = &model_sections.back().second;
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) parser.fail(line_no, "expected 'key = value'");
    std::string key = trim(std::string_view(line).substr(0, eq));
    std::string value = trim(std::string_view(line).substr(eq + 1));
    if (key.empty()) parser.fail(line_no, "empty key");
    if (current == &top && !kTopKeys.count(key)) parser.fail(line_no, "unknown key '" + key + "'");
    if (!current->emplace(key, Entry{value, line_no}).second) {
      parser.fail(line_no, "duplicate key '" + key + "'");
    }
  }

  std::string missing;
  for (const auto& key : kRequiredTopKeys) {
    if (!top.count(key)) missing += (missing.empty() ? "" : ", ") + key;
  }
  if (!missing.empty()) {
    parser.fail(std::max<std::size_t>(line_no, 1), "missing required keys: " + missing);
  }
  if (model_sections.empty()) {
    parser.fail(line_no, "no [model] section (need family and n, plus k for small_world)");
  }

  SweepConfig config;
  if (top.count("title")) config.title = top.at("title").value;
  if (top.count("out_dir")) config.out_dir = top.at("out_dir").value;
  config.base_seed = parser.integer(top, "seed", 0);
  config.trials_per_point = parser.integer(top, "trials", 0);
  if (config.trials_per_point < 1) parser.fail(top.at("trials").line, "trials must be at least 1");
  config.grid.start = parser.number(top, "pb_start", 0);
  config.grid.stop = parser.number(top, "pb_stop", 0);
  config.grid.step = parser.number(top, "pb_step", 0);
  parser.checked(top.at("pb_step").line, [&] {
    SweepConfig probe;
    probe.grid = config.grid;
    probe.models.push_back({});
    probe.centralities.push_back(CentralityKind::kDegree);
    probe.validate();
  });

  const Entry& kinds = top.at("centralities");
  std::istringstream list(kinds.value);
  for (std::string item; std::getline(list, item, ',');) {
    item = trim(item);
    if (item.empty()) continue;
    parser.checked(kinds.line, [&] {
      const CentralityKind kind = parse_centrality_kind(item);
      if (std::find(config.centralities.begin(), config.centralities.end(), kind) ==
          config.centralities.end()) {
        config.centralities.push_back(kind);
      }
    });
  }
  if (config.centralities.empty()) parser.fail(kinds.line, "centralities must not be empty");

  if (top.count("en_rule")) {
    parser.checked(top.at("en_rule").line,
                   [&] { config.rule = parse_neighbor_rule(top.at("en_rule").value); });
  }
  if (top.count("graph_mode")) {
    parser.checked(top.at("graph_mode").line,
                   [&] { config.graph_mode = parse_graph_mode(top.at("graph_mode").value); });
  }

  for (const auto& [line, section] : model_sections) {
    config.models.push_back(parse_model(parser, section, line));
  }
  config.validate();
  return config;
}

SweepConfig parse_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path.string() + ": cannot open config file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str(), path.string());
}

std::string to_config_text(const SweepConfig& config) {
  std::ostringstream out;
  out << "title = " << config.title << '\n';
  out << "seed = " << config.base_seed << '\n';
  out << "trials = " << config.trials_per_point << '\n';
  out << "centralities = ";
  for (std::size_t i = 0; i < config.centralities.size(); ++i) {
    out << (i ? ", " : "") << to_string(config.centralities[i]);
  }
  out << '\n';
  out << "pb_start = " << format_double(config.grid.start) << '\n';
  out << "pb_stop = " << format_double(config.grid.stop) << '\n';
  out << "pb_step = " << format_double(config.grid.step) << '\n';
  out << "en_rule = " << to_string(config.rule) << '\n';
  out << "graph_mode = " << to_string(config.graph_mode) << '\n';
  out << "out_dir = " << config.out_dir << '\n';
  for (const auto& m : config.models) {
    out << "\n[model]\nfamily = " << to_string(m.family) << '\n';
    if (m.family == ModelFamily::kScaleFree) {
      const auto& p = m.scale_free;
      out << "n = " << p.n << '\n'
          << "alpha = " << format_double(p.alpha) << '\n'
          << "beta = " << format_double(p.beta) << '\n'
          << "gamma = " << format_double(p.gamma) << '\n'
          << "delta_in = " << format_double(p.delta_in) << '\n'
          << "delta_out = " << format_double(p.delta_out) << '\n';
    } else {
      const auto& p = m.small_world;
      out << "n = " << p.n << '\n'
          << "k = " << p.k << '\n'
          << "p = " << format_double(p.p) << '\n';
    }
  }
  return out.str();
}

}  // namespace layerrank
