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

#include "layerrank/report.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "layerrank/config.hpp"

namespace layerrank {

namespace {

std::ofstream open_for_write(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(path.string() + ": cannot open for writing");
  return out;
}

double parse_optional(const std::string& field) {
  if (field.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::size_t used = 0;
  const double v = std::stod(field, &used);
  if (used != field.size()) throw std::runtime_error("bad numeric CSV field '" + field + "'");
  return v;
}

}  // namespace

std::string quote_csv_field(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else if (c != '\r') {
      fields.back() += c;
    }
  }
  return fields;
}

void write_trials_csv(const std::vector<TrialRecord>& records, std::ostream& out) {
  out << kTrialsCsvHeader << '\n';
  for (const auto& r : records) {
    const bool sf = r.model.family == ModelFamily::kScaleFree;
    out << quote_csv_field(std::string(to_string(r.model.family))) << ','
        << r.model.node_count() << ',';
    if (sf) {
      const auto& p = r.model.scale_free;
      out << ",," << format_double(p.alpha) << ',' << format_double(p.beta) << ','
          << format_double(p.gamma) << ',';
    } else {
      const auto& p = r.model.small_world;
      out << p.k << ',' << format_double(p.p) << ",,,,";
    }
    out << quote_csv_field(std::string(to_string(r.centrality))) << ',' << format_double(r.p_b)
        << ',' << r.seed << ',' << r.n_kept << ',' << format_double(r.errors.epsilon_raw) << ','
        << format_double(r.errors.epsilon_n_raw) << ',' << format_double(r.errors.epsilon_norm)
        << ',' << format_double(r.errors.epsilon_n_norm) << '\n';
  }
}

void write_trials_csv(const std::vector<TrialRecord>& records, const std::filesystem::path& path) {
  auto out = open_for_write(path);
  write_trials_csv(records, out);
  if (!out.flush()) throw std::runtime_error(path.string() + ": write failed");
}

std::vector<CsvTrialRow> read_trials_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kTrialsCsvHeader) {
    throw std::runtime_error("trials CSV: missing or unexpected header");
  }
  std::vector<CsvTrialRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != 15) throw std::runtime_error("trials CSV: expected 15 fields");
    CsvTrialRow row;
    row.model = f[0];
    row.n = std::stoull(f[1]);
    row.k = parse_optional(f[2]);
    row.p = parse_optional(f[3]);
    row.alpha = parse_optional(f[4]);
    row.beta = parse_optional(f[5]);
    row.gamma = parse_optional(f[6]);
    row.centrality = f[7];
    row.p_b = parse_optional(f[8]);
    row.seed = std::stoull(f[9]);
    row.n_kept = std::stoull(f[10]);
    row.errors = {parse_optional(f[11]), parse_optional(f[12]), parse_optional(f[13]),
                  parse_optional(f[14])};
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string manifest_json(const RunManifest& m) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["artifact_version"] = m.artifact_version;
  j["started_at"] = m.started_at;
  j["finished_at"] = m.finished_at;
  j["base_seed"] = m.config.base_seed;
  j["workers"] = m.workers;
  j["en_rule"] = std::string(to_string(m.config.rule));
  j["graph_mode"] = std::string(to_string(m.config.graph_mode));
  j["tie_break"] = "score descending, node id ascending";
  j["betweenness_on_disconnected"] =
      "reachable pairs only; normalization uses the node count of the measured graph";
  j["config_text"] = to_config_text(m.config);
  ordered_json cells = ordered_json::array();
  for (const auto& c : m.cells) {
    cells.push_back({{"model", c.model_label},
                     {"centrality", std::string(to_string(c.centrality))},
                     {"trials", c.trials},
                     {"skipped", c.skipped},
                     {"disconnected_baselines", c.disconnected},
                     {"mean_eps_norm", c.mean_epsilon},
                     {"mean_epsN_norm", c.mean_epsilon_n},
                     {"sd_eps_norm", c.sd_epsilon},
                     {"sd_epsN_norm", c.sd_epsilon_n}});
  }
  j["cells"] = cells;
  ordered_json identity = ordered_json::array();
  for (const auto& c : m.identity_checks) {
    identity.push_back({{"model", m.config.models.at(c.model_index).label()},
                        {"centrality", std::string(to_string(c.centrality))},
                        {"passed", c.passed}});
  }
  j["identity_checks"] = identity;
  j["round_trip_checked"] = m.round_trip_checked;
  return j.dump(2) + "\n";
}

void write_manifest(const RunManifest& manifest, const std::filesystem::path& path) {
  auto out = open_for_write(path);
  out << manifest_json(manifest);
  if (!out.flush()) throw std::runtime_error(path.string() + ": write failed");
}

SweepConfig config_from_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path.string() + ": cannot open manifest");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
  if (!j.contains("config_text") || !j["config_text"].is_string()) {
    throw ConfigError(path.string() + ": manifest has no config_text");
  }
  return parse_config_text(j["config_text"].get<std::string>(), path.string() + "#config_text");
}

}  // namespace layerrank
