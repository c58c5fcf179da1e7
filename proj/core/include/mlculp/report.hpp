/*
   Copyright (c) 2026 The mlculp Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/
#pragma once

// Serialization of configs, experiment reports and run manifests. JSON field
// names mirror the struct field names; enum values use their short names.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mlculp/classifiers.hpp"
#include "mlculp/harness.hpp"

namespace mlculp {

/// Pretty-printed JSON object, newline-terminated.
std::string config_to_json(const ClassifierConfig& config);
/// Missing fields keep their defaults; unknown fields and bad values throw
/// InvalidArgument. The result is validated.
ClassifierConfig config_from_json(std::string_view text);
ClassifierConfig load_config(const std::filesystem::path& path);

/// Everything but the stage timings, so equal inputs give equal bytes.
std::string report_to_json(const ExperimentReport& report);

/// Human-readable `mean ± std` summary, one metric per line.
void write_report_table(std::ostream& out, const ExperimentReport& report, int decimals = 3);

/// Every tuned cell with its mean selection score.
std::string tune_cells_to_json(const TuneResult& result, Metric selection);

struct RunManifest {
  std::string command;
  /// Resolved flag values in command-line spelling.
  std::vector<std::pair<std::string, std::string>> flags;
  std::vector<std::string> data_files;
  std::string dataset_checksum;
  std::uint64_t seed = 0;
  std::string tool_version;
  std::string started_at;
  std::string finished_at;
  StageTimings timings;
  std::optional<double> best_score;
};

std::string manifest_to_json(const RunManifest& manifest);

/// FNV-1a 64-bit over the concatenated bytes of the files, as 16 hex digits.
std::string file_checksum(const std::vector<std::filesystem::path>& paths);

/// `YYYY-MM-DDTHH:MM:SSZ`.
std::string utc_timestamp(std::chrono::system_clock::time_point when);

}  // namespace mlculp
