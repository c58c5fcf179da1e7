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

// Experiment protocol: grid-search tuning by stratified k-fold CV, repeated
// k-fold evaluation with mean/std aggregation, and average-rank tables.
//
// Every fold builds its graph over train + that fold's test rows. Jobs run in
// parallel but write to fixed slots and are reduced in run/fold order, so
// results are bit-identical for any --jobs value.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mlculp/classifiers.hpp"
#include "mlculp/dataset.hpp"
#include "mlculp/metrics.hpp"

namespace mlculp {

struct TuningGrid {
  std::vector<std::size_t> k_values;
  std::vector<PredictorKind> predictors;
  std::vector<SimilarityKind> similarities;
  /// MiCULP only; ignored for the other algorithms.
  std::vector<double> thresholds;
  Metric selection = Metric::example_f1;

  /// k in 1..45, all predictors, all similarities, t in 0.00..1.00 step 0.05.
  static TuningGrid defaults();
  /// Throws InvalidArgument for an empty axis or a threshold outside [0, 1].
  void validate(Algorithm algorithm) const;
};

struct TuneOptions {
  std::size_t folds = 5;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  /// Supplies the fields the grid does not search (fallback, strictness,
  /// normalization, graph and scoring switches).
  ClassifierConfig base;
};

struct GridCell {
  ClassifierConfig config;
  /// Mean selection metric over the folds.
  double score = 0.0;
};

struct TuneResult {
  ClassifierConfig best;
  double best_score = 0.0;
  /// Every evaluated cell in tie-break order (k, predictor, similarity, t).
  std::vector<GridCell> cells;
};

/// Exhaustive grid search. Ties in the mean go to the earliest cell in
/// (smaller k, cn < aa < ra, cosine < euclidean < manhattan, smaller t) order.
/// Grid k values that leave fewer than k other instances are skipped.
/// Throws TuningInfeasible when the dataset cannot support the protocol.
TuneResult tune(const Dataset& data, Algorithm algorithm, const TuningGrid& grid, const TuneOptions& options);

/// Mean of `metric` over one stratified k-fold pass, computed directly through
/// build_graph + classify for each fold.
double cross_validate(const Dataset& data, const ClassifierConfig& config, std::size_t folds, std::uint64_t seed,
                      Metric metric, std::size_t jobs = 1);

struct EvaluateOptions {
  std::size_t runs = 5;
  std::size_t folds = 10;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
};

struct FoldResult {
  std::size_t run = 0;
  std::size_t fold = 0;
  MetricReport metrics;
};

struct MetricSummary {
  double mean = 0.0;
  /// Population standard deviation over all run x fold cells.
  double std = 0.0;
};

struct StageTimings {
  double graph_seconds = 0.0;
  double predict_seconds = 0.0;
  double metric_seconds = 0.0;
  double total_seconds = 0.0;
};

struct ExperimentReport {
  std::string dataset;
  ClassifierConfig config;
  std::size_t runs = 0;
  std::size_t folds = 0;
  std::uint64_t seed = 0;
  MetricSummary hamming_loss;
  MetricSummary example_f1;
  MetricSummary micro_f1;
  MetricSummary macro_f1;
  /// Run-major, fold-minor.
  std::vector<FoldResult> cells;
  /// Not part of the serialized report; timing varies between runs.
  StageTimings timings;

  const MetricSummary& summary(Metric metric) const noexcept;
};

/// Runs `runs` passes of `folds`-fold CV; run r uses fold seed `seed + r`.
ExperimentReport evaluate(const Dataset& data, const ClassifierConfig& config, const EvaluateOptions& options);

/// Mean and population standard deviation, summed in input order.
MetricSummary summarize(const std::vector<double>& values);

// ---------------------------------------------------------------------------
// Rank tables

enum class RankDirection { higher_better, lower_better };

/// Scores per dataset (rows) and method (columns); std is display-only.
struct ScoreTable {
  std::vector<std::string> methods;
  std::vector<std::string> datasets;
  std::vector<std::vector<std::optional<double>>> mean;
  std::vector<std::vector<std::optional<double>>> std;
};

struct RankTable {
  std::vector<std::string> methods;
  std::vector<std::string> datasets;
  /// ranks[dataset][method], 1 = best; tied scores share the average rank.
  std::vector<std::vector<double>> ranks;
  std::vector<double> average;
};

/// Throws InvalidArgument when any (dataset, method) entry is missing.
RankTable rank(const ScoreTable& table, RankDirection direction);

/// CSV: `dataset,<method>,...` header, then rows of `mean` or `mean ± std`
/// (`+-` also accepted). Empty cells are missing entries.
ScoreTable read_score_table(std::istream& in);

/// Plain-text table with `mean ± std_rank` cells and an average-rank row.
void write_rank_table(std::ostream& out, const ScoreTable& table, const RankTable& ranks, int decimals = 3);

}  // namespace mlculp
