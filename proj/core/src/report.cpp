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
#include "mlculp/report.hpp"

#include <cstdio>
#include <ctime>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "mlculp/error.hpp"

namespace mlculp {

using nlohmann::ordered_json;

namespace {

ordered_json config_json(const ClassifierConfig& c) {
  ordered_json j;
  j["algorithm"] = std::string(to_string(c.algorithm));
  j["k"] = c.k;
  j["predictor"] = std::string(to_string(c.predictor));
  j["similarity"] = std::string(to_string(c.similarity));
  j["threshold"] = c.threshold ? ordered_json(*c.threshold) : ordered_json(nullptr);
  j["fallback"] = std::string(to_string(c.fallback));
  j["strict_threshold"] = c.strict_threshold;
  j["normalize"] = c.normalize;
  j["test_test_edges"] = c.test_test_edges;
  j["membership_in_degree"] = c.membership_in_degree;
  return j;
}

ordered_json metrics_json(const MetricReport& m) {
  ordered_json j;
  j["hamming_loss"] = m.hamming_loss;
  j["example_f1"] = m.example_f1;
  j["micro_f1"] = m.micro_f1;
  j["macro_f1"] = m.macro_f1;
  j["per_label_f1"] = m.per_label_f1;
  return j;
}

ordered_json summary_json(const MetricSummary& s) {
  ordered_json j;
  j["mean"] = s.mean;
  j["std"] = s.std;
  return j;
}

template <class T>
T field(const nlohmann::json& j, const char* name) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InvalidArgument(std::string("config: field '") + name + "' has the wrong type");
  }
}

}  // namespace

std::string config_to_json(const ClassifierConfig& config) { return config_json(config).dump(2) + "\n"; }

ClassifierConfig config_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument(std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw InvalidArgument("config: expected a JSON object");
  ClassifierConfig c;
  bool threshold_given = false;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    const auto& v = it.value();
    if (key == "algorithm") {
      c.algorithm = parse_algorithm(field<std::string>(v, "algorithm"));
    } else if (key == "k") {
      if (!v.is_number_integer() || v.get<long long>() < 1) throw InvalidArgument("config: k must be a positive integer");
      c.k = v.get<std::size_t>();
    } else if (key == "predictor") {
      c.predictor = parse_predictor(field<std::string>(v, "predictor"));
    } else if (key == "similarity") {
      c.similarity = parse_similarity(field<std::string>(v, "similarity"));
    } else if (key == "threshold") {
      threshold_given = true;
      if (v.is_null()) {
        c.threshold.reset();
      } else if (v.is_number()) {
        c.threshold = v.get<double>();
      } else {
        throw InvalidArgument("config: field 'threshold' has the wrong type");
      }
    } else if (key == "fallback") {
      c.fallback = parse_fallback(field<std::string>(v, "fallback"));
    } else if (key == "strict_threshold") {
      c.strict_threshold = field<bool>(v, "strict_threshold");
    } else if (key == "normalize") {
      c.normalize = field<bool>(v, "normalize");
    } else if (key == "test_test_edges") {
      c.test_test_edges = field<bool>(v, "test_test_edges");
    } else if (key == "membership_in_degree") {
      c.membership_in_degree = field<bool>(v, "membership_in_degree");
    } else {
      throw InvalidArgument("config: unknown field '" + key + "'");
    }
  }
  if (!threshold_given && c.algorithm != Algorithm::miculp) c.threshold.reset();
  c.validate();
  return c;
}

ClassifierConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw LoadError(LoadError::Kind::io, "cannot open config '" + path.string() + "'");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return config_from_json(text);
}

std::string report_to_json(const ExperimentReport& report) {
  ordered_json j;
  j["dataset"] = report.dataset;
  j["config"] = config_json(report.config);
  j["runs"] = report.runs;
  j["folds"] = report.folds;
  j["seed"] = report.seed;
  ordered_json summary;
  summary["hamming_loss"] = summary_json(report.hamming_loss);
  summary["example_f1"] = summary_json(report.example_f1);
  summary["micro_f1"] = summary_json(report.micro_f1);
  summary["macro_f1"] = summary_json(report.macro_f1);
  j["summary"] = summary;
  ordered_json cells = ordered_json::array();
  for (const auto& c : report.cells) {
    ordered_json cell;
    cell["run"] = c.run;
    cell["fold"] = c.fold;
    cell["metrics"] = metrics_json(c.metrics);
    cells.push_back(std::move(cell));
  }
  j["cells"] = std::move(cells);
  return j.dump(2) + "\n";
}

void write_report_table(std::ostream& out, const ExperimentReport& report, int decimals) {
  const auto& c = report.config;
  out << "dataset  " << report.dataset << '\n';
  out << "config   " << to_string(c.algorithm) << " k=" << c.k << ' ' << to_string(c.predictor) << ' '
      << to_string(c.similarity);
  if (c.threshold) out << " t=" << *c.threshold;
  out << '\n';
  out << "protocol " << report.runs << " runs x " << report.folds << " folds, seed " << report.seed << '\n';
  char buf[96];
  for (Metric m : {Metric::hamming_loss, Metric::example_f1, Metric::micro_f1, Metric::macro_f1}) {
    const auto& s = report.summary(m);
    std::snprintf(buf, sizeof buf, "%-13s %.*f \xC2\xB1 %.*f", std::string(to_string(m)).c_str(), decimals, s.mean,
                  decimals, s.std);
    out << buf << '\n';
  }
}

std::string tune_cells_to_json(const TuneResult& result, Metric selection) {
  ordered_json j;
  j["selection"] = std::string(to_string(selection));
  j["best"] = config_json(result.best);
  j["best_score"] = result.best_score;
  ordered_json cells = ordered_json::array();
  for (const auto& cell : result.cells) {
    ordered_json o;
    o["k"] = cell.config.k;
    o["predictor"] = std::string(to_string(cell.config.predictor));
    o["similarity"] = std::string(to_string(cell.config.similarity));
    o["threshold"] = cell.config.threshold ? ordered_json(*cell.config.threshold) : ordered_json(nullptr);
    o["score"] = cell.score;
    cells.push_back(std::move(o));
  }
  j["cells"] = std::move(cells);
  return j.dump(2) + "\n";
}

std::string manifest_to_json(const RunManifest& m) {
  ordered_json j;
  j["command"] = m.command;
  ordered_json flags = ordered_json::object();
  for (const auto& [name, value] : m.flags) flags[name] = value;
  j["flags"] = std::move(flags);
  j["data_files"] = m.data_files;
  j["dataset_checksum"] = m.dataset_checksum;
  j["seed"] = m.seed;
  j["tool_version"] = m.tool_version;
  j["started_at"] = m.started_at;
  j["finished_at"] = m.finished_at;
  ordered_json t;
  t["graph_seconds"] = m.timings.graph_seconds;
  t["predict_seconds"] = m.timings.predict_seconds;
  t["metric_seconds"] = m.timings.metric_seconds;
  t["total_seconds"] = m.timings.total_seconds;
  j["timings"] = std::move(t);
  if (m.best_score) j["best_score"] = *m.best_score;
  return j.dump(2) + "\n";
}

std::string file_checksum(const std::vector<std::filesystem::path>& paths) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const auto& p : paths) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw LoadError(LoadError::Kind::io, "cannot open '" + p.string() + "'");
    char buf[1 << 16];
    while (in.read(buf, sizeof buf) || in.gcount() > 0) {
      for (std::streamsize i = 0; i < in.gcount(); ++i) {
        h ^= static_cast<unsigned char>(buf[i]);
        h *= 0x100000001b3ULL;
      }
    }
  }
  char out[17];
  std::snprintf(out, sizeof out, "%016llx", static_cast<unsigned long long>(h));
  return out;
}

std::string utc_timestamp(std::chrono::system_clock::time_point when) {
  const std::time_t t = std::chrono::system_clock::to_time_t(when);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace mlculp
