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
#include "mlculp/predictors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mlculp/error.hpp"

namespace mlculp {

PredictorKind parse_predictor(std::string_view text) {
  if (text == "cn" || text == "common_neighbors") return PredictorKind::common_neighbors;
  if (text == "aa" || text == "adamic_adar") return PredictorKind::adamic_adar;
  if (text == "ra" || text == "resource_allocation") return PredictorKind::resource_allocation;
  throw InvalidArgument("unknown predictor '" + std::string(text) + "'");
}

std::string_view to_string(PredictorKind kind) noexcept {
  switch (kind) {
    case PredictorKind::common_neighbors: return "cn";
    case PredictorKind::adamic_adar: return "aa";
    case PredictorKind::resource_allocation: return "ra";
  }
  return "?";
}

void normalize_rows(ScoreMatrix& scores) {
  for (std::size_t r = 0; r < scores.rows(); ++r) {
    auto row = scores.values.row(r);
    const double top = row.empty() ? 0.0 : *std::max_element(row.begin(), row.end());
    if (top > 0.0) {
      for (double& v : row) v /= top;
    }
  }
  scores.normalized = true;
}

std::vector<NodeId> neighborhood(const LegGraph& graph, NodeId v) {
  std::vector<NodeId> out;
  for (const auto& a : graph.neighbors(v)) out.push_back(a.node);
  return out;
}

void LinkPredictor::score_row(const LegGraph& graph, NodeId test, std::span<double> out) const {
  for (std::size_t slot = 0; slot < out.size(); ++slot) out[slot] = score(graph, test, graph.class_node(slot));
}

double LocalIndexPredictor::weight(const LegGraph& graph, NodeId z) const {
  if (kind_ == PredictorKind::common_neighbors) return 1.0;
  const std::size_t d =
      options_.membership_in_degree ? graph.degree(z) : graph.degree(z, EdgeKind::similarity);
  if (kind_ == PredictorKind::resource_allocation) return d == 0 ? 0.0 : 1.0 / static_cast<double>(d);
  return d <= 1 ? 0.0 : 1.0 / std::log(static_cast<double>(d));
}

double LocalIndexPredictor::score(const LegGraph& graph, NodeId test, NodeId label) const {
  auto a = graph.neighbors(test);
  auto b = graph.neighbors(label);
  double total = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].node < b[j].node) {
      ++i;
    } else if (b[j].node < a[i].node) {
      ++j;
    } else {
      total += weight(graph, a[i].node);
      ++i;
      ++j;
    }
  }
  return total;
}

void LocalIndexPredictor::score_row(const LegGraph& graph, NodeId test, std::span<double> out) const {
  // z is a common neighbor of test and c iff c is adjacent to z, so walk Γ(test)
  // once and credit every class node hanging off each z. z ascends, matching
  // the summation order of score().
  std::fill(out.begin(), out.end(), 0.0);
  const std::size_t first_class = graph.num_train() + graph.num_test() + 1;
  for (const auto& z : graph.neighbors(test)) {
    const double w = weight(graph, z.node);
    for (const auto& c : graph.neighbors(z.node)) {
      if (c.node.value >= first_class) out[c.node.value - first_class] += w;
    }
  }
}

double score(const LegGraph& graph, NodeId test, NodeId label, PredictorKind kind, const ScoreOptions& options) {
  if (graph.role(test) != NodeRole::test) {
    throw InvalidArgument("score: node " + std::to_string(test.value) + " is not a test node");
  }
  if (graph.role(label) != NodeRole::label) {
    throw InvalidArgument("score: node " + std::to_string(label.value) + " is not a class node");
  }
  return LocalIndexPredictor(kind, options).score(graph, test, label);
}

ScoreMatrix score_all(const LegGraph& graph, const LinkPredictor& predictor, bool normalize) {
  ScoreMatrix scores{FeatureMatrix(graph.num_test(), graph.num_class_nodes()), false};
  for (std::size_t j = 0; j < graph.num_test(); ++j) {
    predictor.score_row(graph, graph.test_node(j), scores.values.row(j));
  }
  if (normalize) normalize_rows(scores);
  return scores;
}

ScoreMatrix score_all(const LegGraph& graph, PredictorKind kind, bool normalize, const ScoreOptions& options) {
  return score_all(graph, LocalIndexPredictor(kind, options), normalize);
}

}  // namespace mlculp
