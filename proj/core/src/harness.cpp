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
#include "mlculp/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "mlculp/error.hpp"
#include "mlculp/folds.hpp"
#include "mlculp/leg.hpp"
#include "mlculp/parallel.hpp"
#include "mlculp/similarity.hpp"

namespace mlculp {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Node layout of one fold: train rows first, then test rows, both ascending
/// (the order split() and pooled_features() use).
struct FoldLayout {
  std::vector<std::size_t> node_of_row;
  LabelMatrix train_labels;
  LabelMatrix test_truth;
  std::size_t num_train = 0;
  std::size_t num_test = 0;
};

FoldLayout layout_for(const Dataset& data, const FoldPlan& plan, std::size_t fold) {
  FoldSplit parts = split(data, plan, fold);
  FoldLayout layout;
  layout.num_train = parts.train.size();
  layout.num_test = parts.test.size();
  layout.node_of_row.assign(data.num_labeled(), 0);
  for (std::size_t i = 0; i < parts.train.size(); ++i) layout.node_of_row[parts.train.rows()[i]] = i;
  for (std::size_t j = 0; j < parts.test.size(); ++j) layout.node_of_row[parts.test.rows()[j]] = layout.num_train + j;
  layout.train_labels = parts.train.label_matrix();
  layout.test_truth = std::move(parts.test_truth);
  return layout;
}

bool is_single_label(const LabelMatrix& labels) {
  for (std::size_t r = 0; r < labels.rows(); ++r) {
    auto y = labels.row(r);
    if (std::count(y.begin(), y.end(), std::uint8_t{1}) != 1) return false;
  }
  return true;
}

FeatureMatrix labeled_features(const Dataset& data) {
  if (data.num_unlabeled() == 0) return data.features;
  std::vector<std::size_t> rows(data.num_labeled());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  return data.features.select_rows(rows);
}

LegGraph fold_graph(Algorithm algorithm, const RankedNeighbors& ranked, std::size_t k, const FoldLayout& layout,
                    bool test_test_edges) {
  EdgeSet edges = ranked.edges(k);
  if (!test_test_edges) edges = edges.without_edges_among(static_cast<std::uint32_t>(layout.num_train));
  return LegGraph(variant_for(algorithm), layout.train_labels, layout.num_test, edges);
}

void check_protocol(const Dataset& data, Algorithm algorithm, std::size_t folds) {
  if (folds < 2) throw TuningInfeasible("need at least 2 folds");
  if (folds > data.num_labeled()) {
    throw TuningInfeasible(std::to_string(folds) + " folds requested but the dataset has only " +
                           std::to_string(data.num_labeled()) + " labeled instances");
  }
  if (algorithm == Algorithm::culp && !is_single_label(data.labels)) {
    throw TuningInfeasible("culp: single-label required (every instance needs exactly one positive label)");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Tuning

TuningGrid TuningGrid::defaults() {
  TuningGrid grid;
  for (std::size_t k = 1; k <= 45; ++k) grid.k_values.push_back(k);
  grid.predictors = {PredictorKind::common_neighbors, PredictorKind::adamic_adar, PredictorKind::resource_allocation};
  grid.similarities = {SimilarityKind::cosine, SimilarityKind::euclidean, SimilarityKind::manhattan};
  for (int i = 0; i <= 20; ++i) grid.thresholds.push_back(static_cast<double>(i) / 20.0);
  return grid;
}

void TuningGrid::validate(Algorithm algorithm) const {
  if (k_values.empty() || predictors.empty() || similarities.empty()) throw InvalidArgument("tuning grid: empty axis");
  if (algorithm == Algorithm::miculp && thresholds.empty()) throw InvalidArgument("tuning grid: no thresholds");
  for (auto k : k_values) {
    if (k < 1) throw InvalidArgument("tuning grid: k must be at least 1");
  }
  if (algorithm != Algorithm::miculp) return;
  for (double t : thresholds) {
    if (!(t >= 0.0 && t <= 1.0)) throw InvalidArgument("tuning grid: thresholds must lie in [0, 1]");
  }
}

TuneResult tune(const Dataset& data, Algorithm algorithm, const TuningGrid& grid, const TuneOptions& options) {
  grid.validate(algorithm);
  if (data.num_labeled() < 10) {
    throw TuningInfeasible("tuning needs at least 10 labeled instances, dataset has " +
                           std::to_string(data.num_labeled()));
  }
  check_protocol(data, algorithm, options.folds);

  // canonical axis order so the first best cell is the tie-break winner
  auto ks = grid.k_values;
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  ks.erase(std::remove_if(ks.begin(), ks.end(), [&](std::size_t k) { return k >= data.num_labeled(); }), ks.end());
  if (ks.empty()) throw TuningInfeasible("no grid k leaves k neighbors for every instance");
  auto predictors = grid.predictors;
  std::sort(predictors.begin(), predictors.end());
  predictors.erase(std::unique(predictors.begin(), predictors.end()), predictors.end());
  auto similarities = grid.similarities;
  std::sort(similarities.begin(), similarities.end());
  similarities.erase(std::unique(similarities.begin(), similarities.end()), similarities.end());
  std::vector<std::optional<double>> thresholds;
  if (algorithm == Algorithm::miculp) {
    auto ts = grid.thresholds;
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    thresholds.assign(ts.begin(), ts.end());
  } else {
    thresholds.push_back(std::nullopt);
  }

  const std::size_t nk = ks.size(), np = predictors.size(), ns = similarities.size(), nt = thresholds.size();
  const std::size_t num_cells = nk * np * ns * nt;
  const std::size_t folds = options.folds;
  auto cell_index = [&](std::size_t ki, std::size_t pi, std::size_t si, std::size_t ti) {
    return ((ki * np + pi) * ns + si) * nt + ti;
  };
  // fold_scores[cell * folds + fold]
  std::vector<double> fold_scores(num_cells * folds, 0.0);

  const FoldPlan plan = make_folds(data, folds, options.seed);
  std::vector<FoldLayout> layouts;
  for (std::size_t f = 0; f < folds; ++f) layouts.push_back(layout_for(data, plan, f));

  const FeatureMatrix features = labeled_features(data);
  std::vector<std::optional<NeighborIndex>> indexes(ns);
  parallel_for(ns, options.jobs, [&](std::size_t si) {
    indexes[si].emplace(features, similarities[si], ks.back());
  });

  const ClassifierConfig& base = options.base;
  const ScoreOptions scoring{base.membership_in_degree};
  const bool normalize = algorithm == Algorithm::miculp && base.normalize;

  parallel_for(folds * ns, options.jobs, [&](std::size_t job) {
    const std::size_t f = job / ns;
    const std::size_t si = job % ns;
    const FoldLayout& layout = layouts[f];
    const RankedNeighbors ranked = indexes[si]->rank(layout.node_of_row);
    for (std::size_t ki = 0; ki < nk; ++ki) {
      const LegGraph graph = fold_graph(algorithm, ranked, ks[ki], layout, base.test_test_edges);
      for (std::size_t pi = 0; pi < np; ++pi) {
        const ScoreMatrix scores = score_all(graph, predictors[pi], normalize, scoring);
        for (std::size_t ti = 0; ti < nt; ++ti) {
          LabelMatrix predicted;
          switch (algorithm) {
            case Algorithm::culp: predicted = one_hot(argmax_labels(scores), graph.num_labels()); break;
            case Algorithm::biculp: predicted = compare_pairs(scores); break;
            case Algorithm::miculp:
              predicted = threshold_labels(scores, *thresholds[ti], base.strict_threshold, base.fallback);
              break;
          }
          const double value = evaluate_metrics(layout.test_truth, predicted).get(grid.selection);
          fold_scores[cell_index(ki, pi, si, ti) * folds + f] = value;
        }
      }
    }
  });

  TuneResult result;
  result.cells.reserve(num_cells);
  const bool higher = higher_is_better(grid.selection);
  std::optional<std::size_t> best;
  for (std::size_t ki = 0; ki < nk; ++ki) {
    for (std::size_t pi = 0; pi < np; ++pi) {
      for (std::size_t si = 0; si < ns; ++si) {
        for (std::size_t ti = 0; ti < nt; ++ti) {
          const std::size_t cell = cell_index(ki, pi, si, ti);
          double sum = 0.0;
          for (std::size_t f = 0; f < folds; ++f) sum += fold_scores[cell * folds + f];
          ClassifierConfig config = base;
          config.algorithm = algorithm;
          config.k = ks[ki];
          config.predictor = predictors[pi];
          config.similarity = similarities[si];
          config.threshold = thresholds[ti];
          result.cells.push_back({config, sum / static_cast<double>(folds)});
          const double score = result.cells.back().score;
          if (!best || (higher ? score > result.cells[*best].score : score < result.cells[*best].score)) {
            best = result.cells.size() - 1;
          }
        }
      }
    }
  }
  result.best = result.cells[*best].config;
  result.best_score = result.cells[*best].score;
  return result;
}

double cross_validate(const Dataset& data, const ClassifierConfig& config, std::size_t folds, std::uint64_t seed,
                      Metric metric, std::size_t jobs) {
  config.validate();
  check_protocol(data, config.algorithm, folds);
  const FoldPlan plan = make_folds(data, folds, seed);
  double sum = 0.0;
  for (std::size_t f = 0; f < folds; ++f) {
    const FoldSplit parts = split(data, plan, f);
    const LabelMatrix predicted = predict(config, parts.train, parts.test, jobs);
    sum += evaluate_metrics(parts.test_truth, predicted).get(metric);
  }
  return sum / static_cast<double>(folds);
}

// ---------------------------------------------------------------------------
// Evaluation

const MetricSummary& ExperimentReport::summary(Metric metric) const noexcept {
  switch (metric) {
    case Metric::hamming_loss: return hamming_loss;
    case Metric::example_f1: return example_f1;
    case Metric::micro_f1: return micro_f1;
    case Metric::macro_f1: return macro_f1;
  }
  return example_f1;
}

MetricSummary summarize(const std::vector<double>& values) {
  MetricSummary s;
  if (values.empty()) return s;
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(values.size());
  double sq = 0.0;
  for (double v : values) sq += (v - s.mean) * (v - s.mean);
  s.std = std::sqrt(sq / static_cast<double>(values.size()));
  return s;
}

ExperimentReport evaluate(const Dataset& data, const ClassifierConfig& config, const EvaluateOptions& options) {
  const auto started = Clock::now();
  config.validate();
  if (options.runs < 1) throw InvalidArgument("evaluate: runs must be at least 1");
  check_protocol(data, config.algorithm, options.folds);
  if (config.k >= data.num_labeled()) {
    throw TuningInfeasible("k=" + std::to_string(config.k) + " needs more than " +
                           std::to_string(data.num_labeled()) + " instances");
  }

  ExperimentReport report;
  report.dataset = data.name;
  report.config = config;
  report.runs = options.runs;
  report.folds = options.folds;
  report.seed = options.seed;

  auto index_start = Clock::now();
  const NeighborIndex index(labeled_features(data), config.similarity, config.k, options.jobs);
  const double index_seconds = seconds_since(index_start);

  const std::size_t num_cells = options.runs * options.folds;
  std::vector<FoldPlan> plans;
  for (std::size_t r = 0; r < options.runs; ++r) plans.push_back(make_folds(data, options.folds, options.seed + r));

  report.cells.resize(num_cells);
  std::vector<StageTimings> stage(num_cells);
  parallel_for(num_cells, options.jobs, [&](std::size_t cell) {
    const std::size_t r = cell / options.folds;
    const std::size_t f = cell % options.folds;
    auto t0 = Clock::now();
    const FoldLayout layout = layout_for(data, plans[r], f);
    const LegGraph graph =
        fold_graph(config.algorithm, index.rank(layout.node_of_row), config.k, layout, config.test_test_edges);
    stage[cell].graph_seconds = seconds_since(t0);
    auto t1 = Clock::now();
    const LabelMatrix predicted = classify(config, graph);
    stage[cell].predict_seconds = seconds_since(t1);
    auto t2 = Clock::now();
    report.cells[cell] = FoldResult{r, f, evaluate_metrics(layout.test_truth, predicted)};
    stage[cell].metric_seconds = seconds_since(t2);
  });

  std::vector<double> hl, ef, mi, ma;
  for (const auto& c : report.cells) {
    hl.push_back(c.metrics.hamming_loss);
    ef.push_back(c.metrics.example_f1);
    mi.push_back(c.metrics.micro_f1);
    ma.push_back(c.metrics.macro_f1);
  }
  report.hamming_loss = summarize(hl);
  report.example_f1 = summarize(ef);
  report.micro_f1 = summarize(mi);
  report.macro_f1 = summarize(ma);

  report.timings.graph_seconds = index_seconds;
  for (const auto& s : stage) {
    report.timings.graph_seconds += s.graph_seconds;
    report.timings.predict_seconds += s.predict_seconds;
    report.timings.metric_seconds += s.metric_seconds;
  }
  report.timings.total_seconds = seconds_since(started);
  return report;
}

// ---------------------------------------------------------------------------
// Ranks

RankTable rank(const ScoreTable& table, RankDirection direction) {
  const std::size_t nm = table.methods.size();
  if (nm == 0) throw InvalidArgument("rank: no methods");
  if (table.mean.size() != table.datasets.size()) throw InvalidArgument("rank: dataset rows do not match names");
  RankTable out;
  out.methods = table.methods;
  out.datasets = table.datasets;
  out.average.assign(nm, 0.0);
  for (std::size_t d = 0; d < table.datasets.size(); ++d) {
    const auto& row = table.mean[d];
    if (row.size() != nm) throw InvalidArgument("rank: row '" + table.datasets[d] + "' has the wrong width");
    for (std::size_t m = 0; m < nm; ++m) {
      if (!row[m]) {
        throw InvalidArgument("rank: missing score for method '" + table.methods[m] + "' on '" + table.datasets[d] +
                              "'");
      }
    }
    std::vector<double> ranks(nm);
    for (std::size_t m = 0; m < nm; ++m) {
      std::size_t better = 0, equal = 0;
      for (std::size_t o = 0; o < nm; ++o) {
        const double a = *row[o], b = *row[m];
        if (a == b) {
          ++equal;
        } else if (direction == RankDirection::higher_better ? a > b : a < b) {
          ++better;
        }
      }
      ranks[m] = static_cast<double>(better) + static_cast<double>(equal + 1) / 2.0;
    }
    for (std::size_t m = 0; m < nm; ++m) out.average[m] += ranks[m];
    out.ranks.push_back(std::move(ranks));
  }
  if (!table.datasets.empty()) {
    for (double& a : out.average) a /= static_cast<double>(table.datasets.size());
  }
  return out;
}

namespace {

std::string trim_copy(std::string s) {
  auto notspace = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), notspace));
  s.erase(std::find_if(s.rbegin(), s.rend(), notspace).base(), s.end());
  return s;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream in(line);
  std::string cell;
  while (std::getline(in, cell, ',')) out.push_back(trim_copy(cell));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_number(const std::string& text, std::size_t line) {
  try {
    std::size_t used = 0;
    double v = std::stod(text, &used);
    if (trim_copy(text.substr(used)).empty()) return v;
  } catch (const std::exception&) {
  }
  throw InvalidArgument("score table: bad number '" + text + "' on line " + std::to_string(line));
}

}  // namespace

ScoreTable read_score_table(std::istream& in) {
  ScoreTable table;
  std::string line;
  std::size_t line_no = 0;
  bool header = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim_copy(line).empty() || line[0] == '#') continue;
    auto cells = split_csv(line);
    if (header) {
      if (cells.size() < 2) throw InvalidArgument("score table: header needs at least one method");
      table.methods.assign(cells.begin() + 1, cells.end());
      header = false;
      continue;
    }
    if (cells.size() != table.methods.size() + 1) {
      throw InvalidArgument("score table: line " + std::to_string(line_no) + " has the wrong number of cells");
    }
    table.datasets.push_back(cells[0]);
    std::vector<std::optional<double>> means, stds;
    for (std::size_t c = 1; c < cells.size(); ++c) {
      std::string cell = cells[c];
      // drop a trailing `_<rank>` subscript
      if (auto us = cell.rfind('_'); us != std::string::npos) cell.resize(us);
      if (trim_copy(cell).empty()) {
        means.emplace_back();
        stds.emplace_back();
        continue;
      }
      std::size_t pm = cell.find("\xC2\xB1");
      std::size_t width = 2;
      if (pm == std::string::npos) {
        pm = cell.find("+-");
        width = 2;
      }
      if (pm == std::string::npos) {
        means.emplace_back(parse_number(cell, line_no));
        stds.emplace_back();
      } else {
        means.emplace_back(parse_number(trim_copy(cell.substr(0, pm)), line_no));
        stds.emplace_back(parse_number(trim_copy(cell.substr(pm + width)), line_no));
      }
    }
    table.mean.push_back(std::move(means));
    table.std.push_back(std::move(stds));
  }
  if (header) throw InvalidArgument("score table: missing header");
  return table;
}

namespace {

std::string format_rank(double r) {
  char buf[32];
  if (r == std::floor(r)) {
    std::snprintf(buf, sizeof buf, "%.0f", r);
  } else {
    std::snprintf(buf, sizeof buf, "%g", r);
  }
  return buf;
}

}  // namespace

void write_rank_table(std::ostream& out, const ScoreTable& table, const RankTable& ranks, int decimals) {
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> head{"Dataset"};
  head.insert(head.end(), table.methods.begin(), table.methods.end());
  grid.push_back(head);
  char buf[96];
  for (std::size_t d = 0; d < table.datasets.size(); ++d) {
    std::vector<std::string> row{table.datasets[d]};
    for (std::size_t m = 0; m < table.methods.size(); ++m) {
      const auto& sd = d < table.std.size() && m < table.std[d].size() ? table.std[d][m] : std::nullopt;
      if (sd) {
        std::snprintf(buf, sizeof buf, "%.*f \xC2\xB1 %.*f_%s", decimals, *table.mean[d][m], decimals, *sd,
                      format_rank(ranks.ranks[d][m]).c_str());
      } else {
        std::snprintf(buf, sizeof buf, "%.*f_%s", decimals, *table.mean[d][m], format_rank(ranks.ranks[d][m]).c_str());
      }
      row.emplace_back(buf);
    }
    grid.push_back(std::move(row));
  }
  std::vector<std::string> last{"Rank"};
  for (double a : ranks.average) {
    std::snprintf(buf, sizeof buf, "%.1f", a);
    last.emplace_back(buf);
  }
  grid.push_back(std::move(last));

  // display width: count code points so '±' occupies one column
  auto width = [](const std::string& s) {
    return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char ch) { return (ch & 0xC0) != 0x80; }));
  };
  std::vector<std::size_t> widths(head.size(), 0);
  for (const auto& row : grid) {
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], width(row[c]));
  }
  for (const auto& row : grid) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << row[c];
      if (c + 1 < row.size()) out << std::string(widths[c] - width(row[c]) + 2, ' ');
    }
    out << '\n';
  }
}

}  // namespace mlculp
