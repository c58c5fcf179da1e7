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
#include "mlculp/toy.hpp"

#include <cstdio>
#include <ostream>

#include "mlculp/classifiers.hpp"
#include "mlculp/error.hpp"

namespace mlculp {

ToyExample toy_example() {
  ToyExample toy;
  Dataset& d = toy.data;
  d.name = "toy";
  d.label_names = {"a", "b", "c"};
  d.feature_names = {"x", "y"};
  d.source_attribute_count = 2;
  d.features = FeatureMatrix(0, 2);
  d.labels = LabelMatrix(0, 3);
  const double points[7][2] = {{1, 0}, {0, 1}, {1, 2}, {1, -2}, {0, 3}, {0, -3}, {0, -1}};
  const std::uint8_t labels[6][3] = {{1, 1, 1}, {1, 1, 0}, {1, 1, 0}, {0, 1, 1}, {1, 0, 0}, {0, 0, 1}};
  for (const auto& p : points) d.features.append_row(std::vector<double>{p[0], p[1]});
  for (const auto& y : labels) d.labels.append_row(std::vector<std::uint8_t>{y[0], y[1], y[2]});
  d.ids = {"p1", "p2", "p3", "p4", "p5", "p6", "i"};
  toy.similarity = EdgeSet::from_pairs({{4, 2}, {4, 1}, {1, 0}, {1, 6}, {6, 3}, {6, 5}, {2, 1}, {2, 0}, {3, 5}, {3, 0}, {6, 0}});
  return toy;
}

LegGraph toy_graph(LegVariant variant) {
  if (variant == LegVariant::leg) throw InvalidArgument("toy: the example is multi-label; use mileg or bileg");
  const ToyExample toy = toy_example();
  return LegGraph(variant, toy.data.labels, 1, toy.similarity);
}

namespace {

std::string number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string label_set(const LabelMatrix& y, const std::vector<std::string>& names) {
  std::string out = "{";
  bool first = true;
  for (std::size_t c = 0; c < y.cols(); ++c) {
    if (!y(0, c)) continue;
    out += (first ? "" : ",") + names[c];
    first = false;
  }
  return out + "}";
}

void expect(ToyCheck& check, bool ok, const std::string& what) {
  if (!ok) {
    check.passed = false;
    check.mismatches.push_back(what);
  }
}

bool equals(const LabelMatrix& y) {
  for (std::size_t c = 0; c < y.cols(); ++c) {
    if (y(0, c) != toy_expected::prediction[c]) return false;
  }
  return true;
}

void run_mileg(std::ostream& out, PredictorKind predictor, ToyCheck& check) {
  const ToyExample toy = toy_example();
  const LegGraph graph = toy_graph(LegVariant::mileg);
  const ScoreMatrix scores = score_all(graph, predictor, false);
  out << "mileg: " << graph.num_train() << " train, " << graph.num_test() << " test, " << graph.num_class_nodes()
      << " class nodes, " << graph.num_similarity_edges() << " similarity + " << graph.num_membership_edges()
      << " membership edges\n";
  out << "  scores (" << to_string(predictor) << "):";
  for (std::size_t c = 0; c < scores.cols(); ++c) out << ' ' << toy.data.label_names[c] << '=' << number(scores(0, c));
  out << '\n';
  const LabelMatrix y = threshold_labels(scores, toy_expected::raw_threshold, false, Fallback::none);
  out << "  miculp (raw scores, t=" << number(toy_expected::raw_threshold) << "): " << label_set(y, toy.data.label_names)
      << '\n';
  if (predictor != PredictorKind::common_neighbors) return;
  for (std::size_t c = 0; c < scores.cols(); ++c) {
    expect(check, scores(0, c) == toy_expected::mileg_cn[c],
           "mileg cn score for " + toy.data.label_names[c] + " is " + number(scores(0, c)) + ", expected " +
               number(toy_expected::mileg_cn[c]));
  }
  expect(check, equals(y), "miculp prediction is " + label_set(y, toy.data.label_names) + ", expected {b,c}");
}

void run_bileg(std::ostream& out, PredictorKind predictor, ToyCheck& check) {
  const ToyExample toy = toy_example();
  const LegGraph graph = toy_graph(LegVariant::bileg);
  const ScoreMatrix scores = score_all(graph, predictor, false);
  out << "bileg: " << graph.num_train() << " train, " << graph.num_test() << " test, " << graph.num_class_nodes()
      << " class nodes, " << graph.num_similarity_edges() << " similarity + " << graph.num_membership_edges()
      << " membership edges\n";
  out << "  scores (" << to_string(predictor) << "):";
  // value-0 node first, matching the (c0, c1) reading order
  std::vector<double> ordered;
  for (std::size_t c = 0; c < graph.num_labels(); ++c) {
    const double s0 = scores(0, 2 * c + 1), s1 = scores(0, 2 * c);
    out << ' ' << toy.data.label_names[c] << "0=" << number(s0) << ' ' << toy.data.label_names[c] << "1=" << number(s1);
    ordered.push_back(s0);
    ordered.push_back(s1);
  }
  out << '\n';
  const LabelMatrix y = compare_pairs(scores);
  out << "  biculp: " << label_set(y, toy.data.label_names) << '\n';
  if (predictor != PredictorKind::common_neighbors) return;
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    const std::string name = toy.data.label_names[i / 2] + (i % 2 ? "1" : "0");
    expect(check, ordered[i] == toy_expected::bileg_cn[i],
           "bileg cn score for " + name + " is " + number(ordered[i]) + ", expected " +
               number(toy_expected::bileg_cn[i]));
  }
  expect(check, equals(y), "biculp prediction is " + label_set(y, toy.data.label_names) + ", expected {b,c}");
}

}  // namespace

ToyCheck run_toy(std::ostream& out, std::optional<LegVariant> variant, PredictorKind predictor) {
  if (variant == LegVariant::leg) throw InvalidArgument("toy: the example is multi-label; use mileg or bileg");
  ToyCheck check;
  if (!variant || *variant == LegVariant::mileg) run_mileg(out, predictor, check);
  if (!variant || *variant == LegVariant::bileg) run_bileg(out, predictor, check);
  if (predictor != PredictorKind::common_neighbors) {
    out << "note: reference values exist for cn only; " << to_string(predictor) << " scores are not checked\n";
  }
  for (const auto& m : check.mismatches) out << "MISMATCH " << m << '\n';
  out << (check.passed ? "self-test passed\n" : "self-test FAILED\n");
  return check;
}

}  // namespace mlculp
