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

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mlculp/dataset.hpp"
#include "mlculp/leg.hpp"
#include "mlculp/predictors.hpp"
#include "mlculp/similarity.hpp"

namespace mlculp {

enum class Algorithm { culp, miculp, biculp };

Algorithm parse_algorithm(std::string_view text);
std::string_view to_string(Algorithm algorithm) noexcept;
LegVariant variant_for(Algorithm algorithm) noexcept;

enum class Fallback { none, top1 };

Fallback parse_fallback(std::string_view text);
std::string_view to_string(Fallback fallback) noexcept;

struct ClassifierConfig {
  Algorithm algorithm = Algorithm::miculp;
  std::size_t k = 1;
  PredictorKind predictor = PredictorKind::common_neighbors;
  SimilarityKind similarity = SimilarityKind::euclidean;
  /// Present iff algorithm == miculp.
  std::optional<double> threshold;
  Fallback fallback = Fallback::none;
  /// Use λ > t instead of λ >= t.
  bool strict_threshold = false;
  /// Threshold per-row max-normalized scores (MiCULP).
  bool normalize = true;
  bool test_test_edges = true;
  bool membership_in_degree = true;

  /// Throws InvalidArgument when the fields are inconsistent.
  void validate() const;

  friend bool operator==(const ClassifierConfig&, const ClassifierConfig&) = default;
};

/// Single-label output of CULP. A zero-confidence row had an all-zero score
/// row and was resolved to label 0 by the tie-break.
struct CulpPrediction {
  std::vector<std::size_t> labels;
  std::vector<bool> zero_confidence;
};

// Decisions over a score matrix.

/// Row-wise argmax; ties go to the lowest column.
CulpPrediction argmax_labels(const ScoreMatrix& scores);
/// ŷ = 1 iff score >= t (score > t when strict). With top1 fallback an empty
/// row gets its argmax column.
LabelMatrix threshold_labels(const ScoreMatrix& scores, double threshold, bool strict, Fallback fallback);
/// Columns come in (value-1, value-0) pairs; ŷ_c = 1 iff the value-1 score is
/// strictly larger.
LabelMatrix compare_pairs(const ScoreMatrix& scores);
LabelMatrix one_hot(const CulpPrediction& prediction, std::size_t num_labels);

// Classifiers over a built graph.

CulpPrediction culp_predict(const LegGraph& graph, PredictorKind kind, const ScoreOptions& options = {});

struct MiculpOptions {
  double threshold = 0.5;
  bool strict = false;
  bool normalize = true;
  Fallback fallback = Fallback::none;
  ScoreOptions scoring;
};

LabelMatrix miculp_predict(const LegGraph& graph, PredictorKind kind, const MiculpOptions& options);
LabelMatrix biculp_predict(const LegGraph& graph, PredictorKind kind, const ScoreOptions& options = {});

// End to end.

/// Builds the graph the configured algorithm needs from kNN over pooled features.
LegGraph build_graph(const ClassifierConfig& config, const LabeledView& train, const UnlabeledView& test,
                     std::size_t jobs = 1);
/// Applies the configured decision rule to a graph of the matching variant.
/// CULP output is returned one-hot.
LabelMatrix classify(const ClassifierConfig& config, const LegGraph& graph);
LabelMatrix predict(const ClassifierConfig& config, const LabeledView& train, const UnlabeledView& test,
                    std::size_t jobs = 1);

/// CSV: header of label names, then one 0/1 row per instance. When `ids` is
/// non-empty an `id` column comes first.
void write_predictions(std::ostream& out, const LabelMatrix& predictions, const std::vector<std::string>& label_names,
                       const std::vector<std::string>& ids = {});

}  // namespace mlculp
