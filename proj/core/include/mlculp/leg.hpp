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

// Label-embedded graphs.
//
// Node ids are 1-based and laid out as
//
//   train nodes   1 .. n
//   test nodes    n+1 .. n+m
//   class nodes   n+m+1 .. n+m+C        (LEG, MiLEG)
//                 n+m+1 .. n+m+2C       (BiLEG: label c, 1-based, owns
//                                        n+m+2c-1 for value 1 and n+m+2c for value 0)
//
// Similarity edges join data nodes; membership edges join a train node to a
// class node. Test nodes never carry membership edges.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "mlculp/dataset.hpp"
#include "mlculp/similarity.hpp"

namespace mlculp {

enum class LegVariant { leg, mileg, bileg };

std::string_view to_string(LegVariant variant) noexcept;

enum class EdgeKind : std::uint8_t { similarity, membership };

/// 1-based node id.
struct NodeId {
  std::uint32_t value = 0;

  constexpr NodeId() = default;
  constexpr explicit NodeId(std::uint32_t v) : value(v) {}
  constexpr std::size_t index() const noexcept { return value - 1; }

  friend constexpr auto operator<=>(NodeId, NodeId) = default;
};

enum class NodeRole { train, test, label };

struct Adjacent {
  NodeId node;
  EdgeKind kind;

  friend bool operator==(const Adjacent&, const Adjacent&) = default;
};

struct TaggedEdge {
  NodeId u;  // u < v
  NodeId v;
  EdgeKind kind;

  friend bool operator==(const TaggedEdge&, const TaggedEdge&) = default;
};

/// Undirected heterogeneous graph over train, test and class nodes. Immutable
/// after construction.
class LegGraph {
 public:
  /// `similarity` is over 0-based data-node indices (train first, then test).
  /// `train_labels` has one row per train node.
  LegGraph(LegVariant variant, const LabelMatrix& train_labels, std::size_t num_test, const EdgeSet& similarity);

  LegVariant variant() const noexcept { return variant_; }
  std::size_t num_train() const noexcept { return num_train_; }
  std::size_t num_test() const noexcept { return num_test_; }
  std::size_t num_labels() const noexcept { return num_labels_; }
  std::size_t num_class_nodes() const noexcept {
    return variant_ == LegVariant::bileg ? 2 * num_labels_ : num_labels_;
  }
  std::size_t num_nodes() const noexcept { return num_train_ + num_test_ + num_class_nodes(); }

  bool contains(NodeId v) const noexcept { return v.value >= 1 && v.value <= num_nodes(); }
  NodeRole role(NodeId v) const;

  /// i is 0-based within its group.
  NodeId train_node(std::size_t i) const;
  NodeId test_node(std::size_t j) const;
  /// slot-th class node, 0 <= slot < num_class_nodes().
  NodeId class_node(std::size_t slot) const;
  /// Class node of 0-based label c in LEG/MiLEG.
  NodeId label_node(std::size_t c) const;
  /// BiLEG nodes of 0-based label c for value 1 and value 0.
  NodeId positive_node(std::size_t c) const;
  NodeId negative_node(std::size_t c) const;

  /// Neighbors of v sorted by id. Throws InvalidArgument for an unknown id.
  std::span<const Adjacent> neighbors(NodeId v) const;
  std::size_t degree(NodeId v) const { return neighbors(v).size(); }
  std::size_t degree(NodeId v, EdgeKind kind) const;

  std::size_t num_similarity_edges() const noexcept { return num_similarity_; }
  std::size_t num_membership_edges() const noexcept { return num_membership_; }
  std::size_t num_edges() const noexcept { return num_similarity_ + num_membership_; }

  /// Every edge once, similarity edges first, each group sorted.
  std::vector<TaggedEdge> edges() const;

  friend bool operator==(const LegGraph&, const LegGraph&) = default;

 private:
  void check(NodeId v) const;

  LegVariant variant_;
  std::size_t num_train_;
  std::size_t num_test_;
  std::size_t num_labels_;
  std::size_t num_similarity_ = 0;
  std::size_t num_membership_ = 0;
  std::vector<std::size_t> offsets_;
  std::vector<Adjacent> adjacency_;
};

struct GraphOptions {
  /// Keep similarity edges whose endpoints are both test nodes.
  bool test_test_edges = true;
  std::size_t jobs = 1;
};

/// Single-label LEG. Every train row must have exactly one positive label.
LegGraph build_leg(const LabeledView& train, const UnlabeledView& test, SimilarityKind kind, std::size_t k,
                   const GraphOptions& options = {});
/// Multi-label LEG: train i links to every class node it is positive for.
LegGraph build_mileg(const LabeledView& train, const UnlabeledView& test, SimilarityKind kind, std::size_t k,
                     const GraphOptions& options = {});
/// Binary-dissected LEG: train i links to exactly one of c_1 / c_0 per label.
LegGraph build_bileg(const LabeledView& train, const UnlabeledView& test, SimilarityKind kind, std::size_t k,
                     const GraphOptions& options = {});

/// Variant-dispatching builder over precomputed similarity edges.
LegGraph assemble_leg(LegVariant variant, const LabelMatrix& train_labels, std::size_t num_test,
                      const EdgeSet& similarity);

/// Pooled feature matrix: train rows followed by test rows.
FeatureMatrix pooled_features(const LabeledView& train, const UnlabeledView& test);

/// Text export: a header `n <n> m <m> C <C> variant <name>` then one
/// `s u v` or `c u v` line per edge with 1-based ids.
void write_graph(std::ostream& out, const LegGraph& graph);

}  // namespace mlculp
