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

#ifndef LAYERRANK_REPORT_HPP_
#define LAYERRANK_REPORT_HPP_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "layerrank/experiment.hpp"

namespace layerrank {

inline constexpr const char* kTrialsCsvHeader =
    "model,n,k,p,alpha,beta,gamma,centrality,p_b,seed,n_kept,eps_raw,epsN_raw,eps_norm,"
    "epsN_norm";

// One row per record in the given order. Reals use 17 significant digits;
// parameters that do not apply to a model family are left empty.
void write_trials_csv(const std::vector<TrialRecord>& records, std::ostream& out);
void write_trials_csv(const std::vector<TrialRecord>& records, const std::filesystem::path& path);

// Parsed form of one CSV row. Empty numeric fields read as NaN.
struct CsvTrialRow {
  std::string model;
  std::size_t n = 0;
  double k = 0, p = 0, alpha = 0, beta = 0, gamma = 0;
  std::string centrality;
  double p_b = 0;
  std::uint64_t seed = 0;
  std::size_t n_kept = 0;
  ErrorPair errors;
};

std::vector<CsvTrialRow> read_trials_csv(std::istream& in);

// Splits one CSV line, honouring RFC 4180 double-quote escaping.
std::vector<std::string> split_csv_line(const std::string& line);
std::string quote_csv_field(const std::string& field);

struct RunManifest {
  SweepConfig config;
  std::string artifact_version;
  std::string started_at;  // ISO-8601 UTC
  std::string finished_at;
  std::size_t workers = 1;
  std::vector<CellSummary> cells;
  std::vector<IdentityCheck> identity_checks;
  std::size_t round_trip_checked = 0;
};

// Manifest as JSON. The embedded "config_text" is the canonical config and
// is enough to reproduce the trials CSV byte for byte.
std::string manifest_json(const RunManifest& manifest);
void write_manifest(const RunManifest& manifest, const std::filesystem::path& path);

// Extracts the embedded configuration from a manifest written above.
SweepConfig config_from_manifest(const std::filesystem::path& path);

std::string utc_timestamp();

}  // namespace layerrank

#endif  // LAYERRANK_REPORT_HPP_
