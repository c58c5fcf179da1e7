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
#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <charconv>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "mlculp/classifiers.hpp"
#include "mlculp/error.hpp"
#include "mlculp/harness.hpp"
#include "mlculp/io.hpp"
#include "mlculp/parallel.hpp"
#include "mlculp/report.hpp"
#include "mlculp/similarity.hpp"
#include "mlculp/toy.hpp"
#include "mlculp/version.hpp"

namespace mlculp::cli {

namespace {

/// Bad flag combination discovered after parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DataFlags {
  std::vector<std::string> data;
  std::string format;
  std::string labels;
  bool no_scale = false;
};

struct ModelFlags {
  std::string config;
  std::string algo;
  std::string k;
  std::string predictor;
  std::string similarity;
  std::string threshold;
  bool strict = false;
  bool no_normalize = false;
  std::string fallback;
  bool no_test_test_edges = false;
  bool similarity_degree_only = false;
};

struct RunFlags {
  std::size_t jobs = 0;
  std::uint64_t seed = 0;
  std::string out;
  std::string manifest;
};

struct Flags {
  DataFlags data;
  ModelFlags model;
  RunFlags run;
  std::size_t runs = 5;
  std::size_t folds = 0;
  std::string tune_metric = "example_f1";
  std::string cells;
  std::string table;
  std::string unlabeled;
  std::string edges;
  std::string dump_scores;
  std::string variant = "both";
  std::string direction;
  int decimals = 3;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) throw UsageError("empty item in list '" + text + "'");
    out.push_back(item);
  }
  if (out.empty()) throw UsageError("empty list");
  return out;
}

std::size_t parse_size(const std::string& text, const char* what) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || p != text.data() + text.size()) {
    throw UsageError(std::string(what) + ": expected a non-negative integer, got '" + text + "'");
  }
  return v;
}

double parse_real(const std::string& text, const char* what) {
  double v = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || p != text.data() + text.size()) {
    throw UsageError(std::string(what) + ": expected a number, got '" + text + "'");
  }
  return v;
}

/// `5`, `1,3,5` or `1-45`.
std::vector<std::size_t> parse_k_list(const std::string& text) {
  std::vector<std::size_t> out;
  for (const auto& item : split_list(text)) {
    auto dash = item.find('-');
    if (dash == std::string::npos) {
      out.push_back(parse_size(item, "--k"));
      continue;
    }
    const std::size_t lo = parse_size(item.substr(0, dash), "--k");
    const std::size_t hi = parse_size(item.substr(dash + 1), "--k");
    if (lo > hi) throw UsageError("--k: empty range '" + item + "'");
    for (std::size_t k = lo; k <= hi; ++k) out.push_back(k);
  }
  return out;
}

void add_data_flags(CLI::App* app, DataFlags& f) {
  app->add_option("--data", f.data, "Dataset file; repeat to concatenate files of one schema")->required();
  app->add_option("--format", f.format, "mulan-arff or csv (default: from the file extension)");
  app->add_option("--labels", f.labels, "Label XML path, or comma-separated label attribute names");
  app->add_flag("--no-scale", f.no_scale, "Keep raw feature values (no min-max scaling)");
}

void add_model_flags(CLI::App* app, ModelFlags& f, bool lists) {
  const char* suffix = lists ? " (comma list)" : "";
  app->add_option("--config", f.config, "Classifier config JSON; other model flags override its fields");
  app->add_option("--algo", f.algo, "culp, miculp or biculp");
  app->add_option("--k", f.k, lists ? "Neighbor counts, e.g. 5, 1,3,5 or 1-45" : "Neighbor count");
  app->add_option("--predictor", f.predictor, std::string("cn, aa or ra") + suffix);
  app->add_option("--similarity", f.similarity, std::string("cosine, euclidean or manhattan") + suffix);
  app->add_option("--threshold", f.threshold, std::string("MiCULP threshold") + suffix);
  app->add_flag("--strict-threshold", f.strict, "Predict a label only when its score exceeds the threshold");
  app->add_flag("--no-normalize", f.no_normalize, "Threshold raw scores instead of row-normalized ones");
  app->add_option("--fallback", f.fallback, "none or top1: what MiCULP does with an empty prediction");
  app->add_flag("--no-test-test-edges", f.no_test_test_edges, "Drop similarity edges between two test nodes");
  app->add_flag("--similarity-degree-only", f.similarity_degree_only,
                "Exclude membership edges from node degrees in aa and ra");
}

void add_run_flags(CLI::App* app, RunFlags& f, bool seeded) {
  app->add_option("--jobs", f.jobs, "Worker threads (0 = one per hardware thread)")->capture_default_str();
  if (seeded) app->add_option("--seed", f.seed, "Seed for fold assignment")->capture_default_str();
  app->add_option("--out", f.out, "Output file (default: standard output)");
  app->add_option("--manifest", f.manifest, "Run manifest path (default: <out>.manifest.json)");
}

Dataset load(const DataFlags& f) {
  std::vector<std::filesystem::path> paths(f.data.begin(), f.data.end());
  DatasetFormat format = DatasetFormat::mulan_arff;
  if (!f.format.empty()) {
    format = parse_dataset_format(f.format);
  } else if (paths.front().extension() == ".csv") {
    format = DatasetFormat::csv;
  }
  LoadOptions opts;
  opts.scale = !f.no_scale;
  if (!f.labels.empty()) {
    std::filesystem::path p(f.labels);
    if (p.extension() == ".xml" || std::filesystem::exists(p)) {
      opts.label_xml = p;
    } else {
      opts.label_names = split_list(f.labels);
    }
  }
  return load_datasets(paths, format, opts);
}

/// Applies the switches that are not grid axes.
void apply_switches(const ModelFlags& f, ClassifierConfig& c) {
  if (f.strict) c.strict_threshold = true;
  if (f.no_normalize) c.normalize = false;
  if (!f.fallback.empty()) c.fallback = parse_fallback(f.fallback);
  if (f.no_test_test_edges) c.test_test_edges = false;
  if (f.similarity_degree_only) c.membership_in_degree = false;
}

ClassifierConfig base_config(const ModelFlags& f) {
  ClassifierConfig c;
  if (!f.config.empty()) c = load_config(f.config);
  if (!f.algo.empty()) c.algorithm = parse_algorithm(f.algo);
  apply_switches(f, c);
  return c;
}

ClassifierConfig resolve_config(const ModelFlags& f) {
  ClassifierConfig c = base_config(f);
  if (!f.k.empty()) c.k = parse_size(f.k, "--k");
  if (!f.predictor.empty()) c.predictor = parse_predictor(f.predictor);
  if (!f.similarity.empty()) c.similarity = parse_similarity(f.similarity);
  if (!f.threshold.empty()) c.threshold = parse_real(f.threshold, "--threshold");
  if (c.algorithm != Algorithm::miculp && f.threshold.empty()) c.threshold.reset();
  c.validate();
  return c;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw LoadError(LoadError::Kind::io, "cannot write '" + path + "'");
  out << content;
  if (!out) throw LoadError(LoadError::Kind::io, "failed writing '" + path + "'");
}

std::string manifest_path(const RunFlags& f) {
  if (!f.manifest.empty()) return f.manifest;
  if (!f.out.empty()) return f.out + ".manifest.json";
  return {};
}

void add_config_flags(RunManifest& m, const ClassifierConfig& c) {
  m.flags.emplace_back("--algo", std::string(to_string(c.algorithm)));
  m.flags.emplace_back("--k", std::to_string(c.k));
  m.flags.emplace_back("--predictor", std::string(to_string(c.predictor)));
  m.flags.emplace_back("--similarity", std::string(to_string(c.similarity)));
  if (c.threshold) {
    std::ostringstream t;
    t << *c.threshold;
    m.flags.emplace_back("--threshold", t.str());
  }
  m.flags.emplace_back("--fallback", std::string(to_string(c.fallback)));
  if (c.strict_threshold) m.flags.emplace_back("--strict-threshold", "true");
  if (!c.normalize) m.flags.emplace_back("--no-normalize", "true");
  if (!c.test_test_edges) m.flags.emplace_back("--no-test-test-edges", "true");
  if (!c.membership_in_degree) m.flags.emplace_back("--similarity-degree-only", "true");
}

RunManifest start_manifest(const std::string& command, const Flags& f) {
  RunManifest m;
  m.command = command;
  m.data_files = f.data.data;
  std::vector<std::filesystem::path> paths(f.data.data.begin(), f.data.data.end());
  m.dataset_checksum = file_checksum(paths);
  m.seed = f.run.seed;
  m.tool_version = std::string(version);
  m.started_at = utc_timestamp(std::chrono::system_clock::now());
  if (!f.data.format.empty()) m.flags.emplace_back("--format", f.data.format);
  if (!f.data.labels.empty()) m.flags.emplace_back("--labels", f.data.labels);
  if (f.data.no_scale) m.flags.emplace_back("--no-scale", "true");
  m.flags.emplace_back("--seed", std::to_string(f.run.seed));
  m.flags.emplace_back("--jobs", std::to_string(f.run.jobs));
  return m;
}

void finish_manifest(RunManifest& m, const RunFlags& f) {
  const std::string path = manifest_path(f);
  if (path.empty()) return;
  m.finished_at = utc_timestamp(std::chrono::system_clock::now());
  write_file(path, manifest_to_json(m));
}

// ---------------------------------------------------------------------------

int cmd_tune(const Flags& f, std::ostream& out) {
  const auto started = std::chrono::steady_clock::now();
  RunManifest manifest = start_manifest("tune", f);
  const Dataset data = load(f.data);
  const ClassifierConfig base = base_config(f.model);

  TuningGrid grid = TuningGrid::defaults();
  grid.selection = parse_metric(f.tune_metric);
  if (!f.model.k.empty()) grid.k_values = parse_k_list(f.model.k);
  if (!f.model.predictor.empty()) {
    grid.predictors.clear();
    for (const auto& p : split_list(f.model.predictor)) grid.predictors.push_back(parse_predictor(p));
  }
  if (!f.model.similarity.empty()) {
    grid.similarities.clear();
    for (const auto& s : split_list(f.model.similarity)) grid.similarities.push_back(parse_similarity(s));
  }
  if (!f.model.threshold.empty()) {
    if (base.algorithm != Algorithm::miculp) throw UsageError("--threshold only applies to miculp");
    grid.thresholds.clear();
    for (const auto& t : split_list(f.model.threshold)) grid.thresholds.push_back(parse_real(t, "--threshold"));
  }

  TuneOptions opts;
  opts.folds = f.folds == 0 ? 5 : f.folds;
  opts.seed = f.run.seed;
  opts.jobs = resolve_jobs(f.run.jobs);
  opts.base = base;
  const TuneResult result = tune(data, base.algorithm, grid, opts);

  const std::string json = config_to_json(result.best);
  if (f.run.out.empty()) {
    out << json;
  } else {
    write_file(f.run.out, json);
    out << "tuned " << to_string(base.algorithm) << " on " << data.name << ": k=" << result.best.k << ' '
        << to_string(result.best.predictor) << ' ' << to_string(result.best.similarity);
    if (result.best.threshold) out << " t=" << *result.best.threshold;
    out << ", mean " << to_string(grid.selection) << ' ' << result.best_score << " over " << result.cells.size()
        << " cells\n";
  }
  if (!f.cells.empty()) write_file(f.cells, tune_cells_to_json(result, grid.selection));

  add_config_flags(manifest, result.best);
  manifest.flags.emplace_back("--folds", std::to_string(opts.folds));
  manifest.flags.emplace_back("--tune-metric", std::string(to_string(grid.selection)));
  manifest.best_score = result.best_score;
  manifest.timings.total_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  finish_manifest(manifest, f.run);
  return exit_ok;
}

int cmd_evaluate(const Flags& f, std::ostream& out) {
  RunManifest manifest = start_manifest("evaluate", f);
  const Dataset data = load(f.data);
  const ClassifierConfig config = resolve_config(f.model);
  EvaluateOptions opts;
  opts.runs = f.runs;
  opts.folds = f.folds == 0 ? 10 : f.folds;
  opts.seed = f.run.seed;
  opts.jobs = resolve_jobs(f.run.jobs);
  const ExperimentReport report = evaluate(data, config, opts);

  if (!f.run.out.empty()) write_file(f.run.out, report_to_json(report));
  std::ostringstream table;
  write_report_table(table, report);
  if (!f.table.empty()) write_file(f.table, table.str());
  out << table.str();

  add_config_flags(manifest, config);
  manifest.flags.emplace_back("--runs", std::to_string(opts.runs));
  manifest.flags.emplace_back("--folds", std::to_string(opts.folds));
  manifest.timings = report.timings;
  finish_manifest(manifest, f.run);
  return exit_ok;
}

std::vector<std::string> class_node_names(const LegGraph& graph, const std::vector<std::string>& labels) {
  std::vector<std::string> names;
  for (std::size_t c = 0; c < labels.size(); ++c) {
    if (graph.variant() == LegVariant::bileg) {
      names.push_back(labels[c] + "=1");
      names.push_back(labels[c] + "=0");
    } else {
      names.push_back(labels[c]);
    }
  }
  return names;
}

void write_scores(std::ostream& out, const ScoreMatrix& scores, const std::vector<std::string>& names) {
  for (std::size_t c = 0; c < names.size(); ++c) out << (c ? "," : "") << names[c];
  out << '\n';
  char buf[32];
  for (std::size_t r = 0; r < scores.rows(); ++r) {
    for (std::size_t c = 0; c < scores.cols(); ++c) {
      auto [p, ec] = std::to_chars(buf, buf + sizeof buf, scores(r, c));
      out << (c ? "," : "") << std::string_view(buf, static_cast<std::size_t>(p - buf));
    }
    out << '\n';
  }
}

int cmd_predict(const Flags& f, std::ostream& out) {
  RunManifest manifest = start_manifest("predict", f);
  DataFlags raw = f.data;
  raw.no_scale = true;
  const Dataset train = load(raw);
  if (train.num_labeled() == 0) throw LoadError(LoadError::Kind::empty_dataset, "training data has no labeled rows");

  // query rows: the unlabeled file, or the unlabeled tail of --data
  FeatureMatrix queries(0, train.num_features());
  std::vector<std::string> query_ids;
  if (!f.unlabeled.empty()) {
    DataFlags q = raw;
    q.data = {f.unlabeled};
    std::vector<std::filesystem::path> paths{f.unlabeled};
    DatasetFormat format = f.data.format.empty()
                               ? (paths.front().extension() == ".csv" ? DatasetFormat::csv : DatasetFormat::mulan_arff)
                               : parse_dataset_format(f.data.format);
    LoadOptions opts;
    opts.scale = false;
    opts.allow_empty = true;
    if (format == DatasetFormat::mulan_arff) opts.label_names = train.label_names;
    const Dataset query = load_dataset(paths.front(), format, opts);
    if (query.num_features() != train.num_features()) {
      throw LoadError(LoadError::Kind::malformed_header,
                      "feature dimension mismatch: training data has " + std::to_string(train.num_features()) +
                          " features, '" + f.unlabeled + "' has " + std::to_string(query.num_features()));
    }
    queries = query.features;
    query_ids = query.ids;
  } else {
    std::vector<std::size_t> rows;
    for (std::size_t r = train.num_labeled(); r < train.features.rows(); ++r) rows.push_back(r);
    queries = train.features.select_rows(rows);
    if (!train.ids.empty()) query_ids.assign(train.ids.begin() + static_cast<std::ptrdiff_t>(train.num_labeled()),
                                             train.ids.end());
  }

  const ClassifierConfig config = resolve_config(f.model);

  Dataset pooled;
  pooled.name = train.name;
  pooled.label_names = train.label_names;
  pooled.feature_names = train.feature_names;
  pooled.source_attribute_count = train.source_attribute_count;
  std::vector<std::size_t> labeled(train.num_labeled());
  for (std::size_t i = 0; i < labeled.size(); ++i) labeled[i] = i;
  pooled.features = vstack(train.features.select_rows(labeled), queries);
  pooled.labels = train.labels;
  if (!f.data.no_scale) min_max_scale(pooled.features);

  std::ostringstream csv;
  if (queries.rows() == 0) {
    write_predictions(csv, LabelMatrix(0, train.num_labels()), train.label_names, {});
  } else {
    const LabeledView train_view = LabeledView::all(pooled);
    const UnlabeledView query_view = UnlabeledView::unlabeled_rows(pooled);
    LegGraph graph = [&] {
      if (f.edges.empty()) return build_graph(config, train_view, query_view, resolve_jobs(f.run.jobs));
      std::ifstream in(f.edges);
      if (!in) throw LoadError(LoadError::Kind::io, "cannot open edge list '" + f.edges + "'");
      EdgeSet edges = read_edge_list(in);
      if (!config.test_test_edges) edges = edges.without_edges_among(static_cast<std::uint32_t>(train_view.size()));
      return assemble_leg(variant_for(config.algorithm), pooled.labels, query_view.size(), edges);
    }();
    const LabelMatrix predicted = classify(config, graph);
    write_predictions(csv, predicted, train.label_names,
                      query_ids.size() == predicted.rows() ? query_ids : std::vector<std::string>{});
    if (!f.dump_scores.empty()) {
      const bool normalize = config.algorithm == Algorithm::miculp && config.normalize;
      const ScoreMatrix scores =
          score_all(graph, config.predictor, normalize, ScoreOptions{config.membership_in_degree});
      std::ostringstream s;
      write_scores(s, scores, class_node_names(graph, train.label_names));
      write_file(f.dump_scores, s.str());
    }
  }
  if (f.run.out.empty()) {
    out << csv.str();
  } else {
    write_file(f.run.out, csv.str());
  }
  manifest.data_files.push_back(f.unlabeled);
  if (!f.unlabeled.empty()) manifest.flags.emplace_back("--unlabeled", f.unlabeled);
  if (!f.edges.empty()) manifest.flags.emplace_back("--edges", f.edges);
  add_config_flags(manifest, config);
  finish_manifest(manifest, f.run);
  return exit_ok;
}

int cmd_toy(const Flags& f, std::ostream& out) {
  std::optional<LegVariant> variant;
  if (f.variant == "mileg") {
    variant = LegVariant::mileg;
  } else if (f.variant == "bileg") {
    variant = LegVariant::bileg;
  } else if (f.variant != "both") {
    throw UsageError("--variant must be mileg, bileg or both");
  }
  const PredictorKind predictor =
      f.model.predictor.empty() ? PredictorKind::common_neighbors : parse_predictor(f.model.predictor);
  const ToyCheck check = run_toy(out, variant, predictor);
  return check.passed ? exit_ok : exit_self_test;
}

int cmd_rank(const Flags& f, std::ostream& out) {
  std::ifstream in(f.table);
  if (!in) throw LoadError(LoadError::Kind::io, "cannot open score table '" + f.table + "'");
  const ScoreTable table = read_score_table(in);
  RankDirection direction;
  if (f.direction == "higher") {
    direction = RankDirection::higher_better;
  } else if (f.direction == "lower") {
    direction = RankDirection::lower_better;
  } else {
    throw UsageError("--direction must be higher or lower");
  }
  const RankTable ranks = rank(table, direction);
  std::ostringstream text;
  write_rank_table(text, table, ranks, f.decimals);
  if (f.run.out.empty()) {
    out << text.str();
  } else {
    write_file(f.run.out, text.str());
  }
  return exit_ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Flags f;
  CLI::App app{"Multi-label classification by link prediction on label-embedded graphs", "mlculp"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(version));

  auto* tune_cmd = app.add_subcommand("tune", "Grid-search a classifier config by stratified cross-validation");
  add_data_flags(tune_cmd, f.data);
  add_model_flags(tune_cmd, f.model, true);
  add_run_flags(tune_cmd, f.run, true);
  tune_cmd->add_option("--folds", f.folds, "Cross-validation folds (default 5)");
  tune_cmd->add_option("--tune-metric", f.tune_metric, "hamming_loss, example_f1, micro_f1 or macro_f1")
      ->capture_default_str();
  tune_cmd->add_option("--cells", f.cells, "Write every grid cell's mean score as JSON");

  auto* eval_cmd = app.add_subcommand("evaluate", "Repeated k-fold evaluation of one config");
  add_data_flags(eval_cmd, f.data);
  add_model_flags(eval_cmd, f.model, false);
  add_run_flags(eval_cmd, f.run, true);
  eval_cmd->add_option("--runs", f.runs, "Repetitions, each with fresh folds")->capture_default_str();
  eval_cmd->add_option("--folds", f.folds, "Folds per repetition (default 10)");
  eval_cmd->add_option("--table", f.table, "Also write the text summary to this file");

  auto* predict_cmd = app.add_subcommand("predict", "Label unlabeled instances");
  add_data_flags(predict_cmd, f.data);
  add_model_flags(predict_cmd, f.model, false);
  add_run_flags(predict_cmd, f.run, false);
  predict_cmd->add_option("--unlabeled", f.unlabeled, "Feature file of the instances to label");
  predict_cmd->add_option("--edges", f.edges, "Similarity edge list (1-based, training rows first) instead of kNN");
  predict_cmd->add_option("--dump-scores", f.dump_scores, "Write the link-prediction score matrix as CSV");

  auto* toy_cmd = app.add_subcommand("toy", "Run the built-in worked example as a self-test");
  toy_cmd->add_option("--variant", f.variant, "mileg, bileg or both")->capture_default_str();
  toy_cmd->add_option("--predictor", f.model.predictor, "cn, aa or ra (reference values exist for cn)");

  auto* rank_cmd = app.add_subcommand("rank", "Average-rank table from per-dataset method scores");
  rank_cmd->add_option("--table", f.table, "CSV: dataset,<method>,... with `mean` or `mean ± std` cells")
      ->required();
  rank_cmd->add_option("--direction", f.direction, "higher or lower (which scores are better)")->required();
  rank_cmd->add_option("--decimals", f.decimals, "Digits after the decimal point")->capture_default_str();
  rank_cmd->add_option("--out", f.run.out, "Output file (default: standard output)");

  std::vector<std::string> argv_storage{"mlculp"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_bad_flags;
  }

  try {
    if (tune_cmd->parsed()) return cmd_tune(f, out);
    if (eval_cmd->parsed()) return cmd_evaluate(f, out);
    if (predict_cmd->parsed()) return cmd_predict(f, out);
    if (toy_cmd->parsed()) return cmd_toy(f, out);
    if (rank_cmd->parsed()) return cmd_rank(f, out);
  } catch (const UsageError& e) {
    err << "mlculp: error: " << e.what() << '\n';
    return exit_bad_flags;
  } catch (const LoadError& e) {
    err << "mlculp: error: " << e.what() << '\n';
    return exit_load_failure;
  } catch (const TuningInfeasible& e) {
    err << "mlculp: error: " << e.what() << '\n';
    return exit_infeasible;
  } catch (const std::exception& e) {
    err << "mlculp: error: " << e.what() << '\n';
    return exit_bad_flags;
  }
  return exit_bad_flags;
}

}  // namespace mlculp::cli
