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
#include "mlculp/leg.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "mlculp/error.hpp"

namespace mlculp {

std::string_view to_string(LegVariant variant) noexcept {
  switch (variant) {
    case LegVariant::leg: return "leg";
    case LegVariant::mileg: return "mileg";
    case LegVariant::bileg: return "bileg";
  }
  return "?";
}

LegGraph::LegGraph(LegVariant variant, const LabelMatrix& train_labels, std::size_t num_test,
                   const EdgeSet& similarity)
    : variant_(variant), num_train_(train_labels.rows()), num_test_(num_test), num_labels_(train_labels.cols()) {
  const std::size_t data_nodes = num_train_ + num_test_;
  if (similarity.node_bound() > data_nodes) {
    throw InvalidArgument("LEG: similarity edge references data node " + std::to_string(similarity.node_bound()) +
                          " but only " + std::to_string(data_nodes) + " exist");
  }

  // membership edges as (train index, class slot)
  std::vector<std::pair<std::size_t, std::size_t>> membership;
  for (std::size_t i = 0; i < num_train_; ++i) {
    auto y = train_labels.row(i);
    switch (variant) {
      case LegVariant::leg: {
        const auto positives = std::count(y.begin(), y.end(), std::uint8_t{1});
        if (positives != 1) {
          throw InvalidArgument("LEG: single-label required, train row " + std::to_string(i) + " has " +
                                std::to_string(positives) + " positive labels (use MiLEG)");
        }
        membership.emplace_back(i, static_cast<std::size_t>(std::find(y.begin(), y.end(), 1) - y.begin()));
        break;
      }
      case LegVariant::mileg:
        for (std::size_t c = 0; c < y.size(); ++c) {
          if (y[c] == 1) membership.emplace_back(i, c);
        }
        break;
      case LegVariant::bileg:
        // label c (1-based) lands on n+m+2c-y, i.e. slot 2c-1-y for 0-based c
        for (std::size_t c = 0; c < y.size(); ++c) membership.emplace_back(i, 2 * c + (y[c] == 1 ? 0 : 1));
        break;
    }
  }

  std::vector<std::size_t> degree(num_nodes(), 0);
  for (const auto& [u, v] : similarity) {
    ++degree[u];
    ++degree[v];
  }
  for (const auto& [i, slot] : membership) {
    ++degree[i];
    ++degree[data_nodes + slot];
  }
  offsets_.assign(num_nodes() + 1, 0);
  for (std::size_t v = 0; v < num_nodes(); ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  adjacency_.resize(offsets_.back());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  auto link = [&](std::size_t a, std::size_t b, EdgeKind kind) {
    adjacency_[fill[a]++] = {NodeId(static_cast<std::uint32_t>(b + 1)), kind};
    adjacency_[fill[b]++] = {NodeId(static_cast<std::uint32_t>(a + 1)), kind};
  };
  for (const auto& [u, v] : similarity) link(u, v, EdgeKind::similarity);
  for (const auto& [i, slot] : membership) link(i, data_nodes + slot, EdgeKind::membership);
  for (std::size_t v = 0; v < num_nodes(); ++v) {
    std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
              adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]),
              [](const Adjacent& a, const Adjacent& b) { return a.node < b.node; });
  }
  num_similarity_ = similarity.size();
  num_membership_ = membership.size();
}

void LegGraph::check(NodeId v) const {
  if (!contains(v)) {
    throw InvalidArgument("LEG: node id " + std::to_string(v.value) + " outside [1, " + std::to_string(num_nodes()) +
                          "]");
  }
}

NodeRole LegGraph::role(NodeId v) const {
  check(v);
  if (v.value <= num_train_) return NodeRole::train;
  if (v.value <= num_train_ + num_test_) return NodeRole::test;
  return NodeRole::label;
}

NodeId LegGraph::train_node(std::size_t i) const {
  if (i >= num_train_) throw InvalidArgument("LEG: train index out of range");
  return NodeId(static_cast<std::uint32_t>(i + 1));
}

NodeId LegGraph::test_node(std::size_t j) const {
  if (j >= num_test_) throw InvalidArgument("LEG: test index out of range");
  return NodeId(static_cast<std::uint32_t>(num_train_ + j + 1));
}

NodeId LegGraph::class_node(std::size_t slot) const {
  if (slot >= num_class_nodes()) throw InvalidArgument("LEG: class slot out of range");
  return NodeId(static_cast<std::uint32_t>(num_train_ + num_test_ + slot + 1));
}

NodeId LegGraph::label_node(std::size_t c) const {
  if (variant_ == LegVariant::bileg) throw VariantMismatch("label_node: BiLEG has two nodes per label");
  return class_node(c);
}

NodeId LegGraph::positive_node(std::size_t c) const {
  if (variant_ != LegVariant::bileg) throw VariantMismatch("positive_node: only BiLEG has value nodes");
  return class_node(2 * c);
}

NodeId LegGraph::negative_node(std::size_t c) const {
  if (variant_ != LegVariant::bileg) throw VariantMismatch("negative_node: only BiLEG has value nodes");
  return class_node(2 * c + 1);
}

std::span<const Adjacent> LegGraph::neighbors(NodeId v) const {
  check(v);
  const auto i = v.index();
  return {adjacency_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
}

std::size_t LegGraph::degree(NodeId v, EdgeKind kind) const {
  auto adj = neighbors(v);
  return static_cast<std::size_t>(
      std::count_if(adj.begin(), adj.end(), [kind](const Adjacent& a) { return a.kind == kind; }));
}

std::vector<TaggedEdge> LegGraph::edges() const {
  std::vector<TaggedEdge> out;
  out.reserve(num_edges());
  for (EdgeKind kind : {EdgeKind::similarity, EdgeKind::membership}) {
    for (std::size_t i = 0; i < num_nodes(); ++i) {
      const NodeId u(static_cast<std::uint32_t>(i + 1));
      for (const auto& a : neighbors(u)) {
        if (a.kind == kind && u < a.node) out.push_back({u, a.node, kind});
      }
    }
  }
  return out;
}

FeatureMatrix pooled_features(const LabeledView& train, const UnlabeledView& test) {
  if (train.size() > 0 && test.size() > 0 && train.num_features() != test.num_features()) {
    throw InvalidArgument("feature dimension mismatch: train has " + std::to_string(train.num_features()) +
                          ", test has " + std::to_string(test.num_features()));
  }
  return vstack(train.feature_matrix(), test.feature_matrix());
}

namespace {

LegGraph build(LegVariant variant, const LabeledView& train, const UnlabeledView& test, SimilarityKind kind,
               std::size_t k, const GraphOptions& options) {
  if (train.size() == 0) throw InvalidArgument("LEG: need at least one train instance");
  EdgeSet similarity = knn_convert(pooled_features(train, test), kind, k, options.jobs);
  if (!options.test_test_edges) {
    similarity = similarity.without_edges_among(static_cast<std::uint32_t>(train.size()));
  }
  return LegGraph(variant, train.label_matrix(), test.size(), similarity);
}

}  // namespace

LegGraph build_leg(const LabeledView& train, const UnlabeledView& test, SimilarityKind kind, std::size_t k,
                   const GraphOptions& options) {
  return build(LegVariant::leg, train, test, kind, k, options);
}

LegGraph build_mileg(const LabeledView& train, const UnlabeledView& test, SimilarityKind kind, std::size_t k,
                     const GraphOptions& options) {
  return build(LegVariant::mileg, train, test, kind, k, options);
}

LegGraph build_bileg(const LabeledView& train, const UnlabeledView& test, SimilarityKind kind, std::size_t k,
                     const GraphOptions& options) {
  return build(LegVariant::bileg, train, test, kind, k, options);
}

LegGraph assemble_leg(LegVariant variant, const LabelMatrix& train_labels, std::size_t num_test,
                      const EdgeSet& similarity) {
  return LegGraph(variant, train_labels, num_test, similarity);
}

void write_graph(std::ostream& out, const LegGraph& graph) {
  out << "n " << graph.num_train() << " m " << graph.num_test() << " C " << graph.num_labels() << " variant "
      << to_string(graph.variant()) << '\n';
  for (const auto& e : graph.edges()) {
    out << (e.kind == EdgeKind::similarity ? 's' : 'c') << ' ' << e.u.value << ' ' << e.v.value << '\n';
  }
}

}  // namespace mlculp
