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
#include <span>
#include <string_view>
#include <vector>

#include "mlculp/leg.hpp"
#include "mlculp/matrix.hpp"

namespace mlculp {

/// Local link-prediction indices. Declaration order is the tuner's tie-break order.
enum class PredictorKind { common_neighbors, adamic_adar, resource_allocation };

/// Accepts the short names (`cn`, `aa`, `ra`) and the long snake_case names.
PredictorKind parse_predictor(std::string_view text);
/// Short name: `cn`, `aa` or `ra`.
std::string_view to_string(PredictorKind kind) noexcept;

struct ScoreOptions {
  /// Count membership edges in |Γ(z)| for Adamic-Adar and Resource Allocation.
  /// With this off, a common neighbor whose similarity degree is 1 contributes
  /// nothing to Adamic-Adar (its log weight would be undefined).
  bool membership_in_degree = true;
};

/// Per-test-node scores against every class node, columns in class-slot order.
struct ScoreMatrix {
  FeatureMatrix values;
  bool normalized = false;

  std::size_t rows() const noexcept { return values.rows(); }
  std::size_t cols() const noexcept { return values.cols(); }
  double operator()(std::size_t r, std::size_t c) const noexcept { return values(r, c); }
};

/// Divides each row by its maximum; rows whose maximum is 0 stay all-zero.
void normalize_rows(ScoreMatrix& scores);

/// Γ(v): every adjacent node, both edge kinds, ascending id.
std::vector<NodeId> neighborhood(const LegGraph& graph, NodeId v);

/// Scoring interface. Additional indices plug in by implementing `score`;
/// `score_row` may be overridden when a faster row-at-a-time form exists.
class LinkPredictor {
 public:
  virtual ~LinkPredictor() = default;
  virtual std::string_view name() const = 0;
  /// Score of the (test, class) pair. Callers have validated the roles.
  virtual double score(const LegGraph& graph, NodeId test, NodeId label) const = 0;
  /// Scores of `test` against every class node; out.size() == num_class_nodes().
  virtual void score_row(const LegGraph& graph, NodeId test, std::span<double> out) const;
};

/// Common Neighbors, Adamic-Adar (natural log) and Resource Allocation.
class LocalIndexPredictor final : public LinkPredictor {
 public:
  explicit LocalIndexPredictor(PredictorKind kind, ScoreOptions options = {}) : kind_(kind), options_(options) {}

  std::string_view name() const override { return to_string(kind_); }
  double score(const LegGraph& graph, NodeId test, NodeId label) const override;
  void score_row(const LegGraph& graph, NodeId test, std::span<double> out) const override;

 private:
  double weight(const LegGraph& graph, NodeId z) const;

  PredictorKind kind_;
  ScoreOptions options_;
};

/// λ(test, label). Throws InvalidArgument unless test is a test node and
/// label a class node.
double score(const LegGraph& graph, NodeId test, NodeId label, PredictorKind kind, const ScoreOptions& options = {});

/// Scores for every test node (rows, in test order) against every class node.
ScoreMatrix score_all(const LegGraph& graph, const LinkPredictor& predictor, bool normalize);
ScoreMatrix score_all(const LegGraph& graph, PredictorKind kind, bool normalize, const ScoreOptions& options = {});

}  // namespace mlculp
