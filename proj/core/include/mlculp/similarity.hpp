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
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "mlculp/matrix.hpp"

namespace mlculp {

/// Declaration order is the tie-break order used by the tuner.
enum class SimilarityKind { cosine, euclidean, manhattan };

SimilarityKind parse_similarity(std::string_view text);
std::string_view to_string(SimilarityKind kind) noexcept;

/// Euclidean and Manhattan return distances (lower is closer). Cosine returns
/// a similarity in [-1, 1] (higher is closer) and is 0 when either vector is
/// all zero. Throws InvalidArgument on a dimension mismatch.
double pairwise_score(std::span<const double> a, std::span<const double> b, SimilarityKind kind);

/// pairwise_score mapped so that lower always means closer.
double dissimilarity(std::span<const double> a, std::span<const double> b, SimilarityKind kind);

/// Undirected edges over 0-based data-node indices, stored once as (lo, hi)
/// with lo < hi, sorted and free of duplicates.
class EdgeSet {
 public:
  using Edge = std::pair<std::uint32_t, std::uint32_t>;

  EdgeSet() = default;
  /// Normalizes orientation, drops duplicates. Self-loops are rejected.
  static EdgeSet from_pairs(std::vector<Edge> pairs);

  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }
  bool contains(std::uint32_t u, std::uint32_t v) const;
  std::span<const Edge> edges() const noexcept { return edges_; }
  auto begin() const noexcept { return edges_.begin(); }
  auto end() const noexcept { return edges_.end(); }

  /// Largest node index referenced plus one (0 when empty).
  std::size_t node_bound() const noexcept { return edges_.empty() ? 0 : max_node_ + 1; }

  /// Copy without edges whose endpoints are both >= first.
  EdgeSet without_edges_among(std::uint32_t first) const;

  friend bool operator==(const EdgeSet& a, const EdgeSet& b) { return a.edges_ == b.edges_; }

 private:
  std::vector<Edge> edges_;
  std::uint32_t max_node_ = 0;
};

/// Per-node nearest-neighbor lists with ties already resolved.
class RankedNeighbors {
 public:
  RankedNeighbors(std::vector<std::vector<std::uint32_t>> lists, std::size_t max_k)
      : lists_(std::move(lists)), max_k_(max_k) {}

  std::size_t size() const noexcept { return lists_.size(); }
  /// Candidates of node `node`, closest first. At least max_k entries.
  std::span<const std::uint32_t> neighbors(std::size_t node) const { return lists_[node]; }
  /// Symmetric union of every node's k closest nodes; k <= max_k.
  EdgeSet edges(std::size_t k) const;

 private:
  std::vector<std::vector<std::uint32_t>> lists_;
  std::size_t max_k_;
};

/// Exact nearest-neighbor candidates for every row of a feature matrix, built
/// once and reused for every k up to `max_k` and every node ordering.
///
/// Each row keeps all rows at least as close as its max_k-th nearest one, so
/// ties that straddle the cut can still be resolved by node index later.
class NeighborIndex {
 public:
  NeighborIndex(const FeatureMatrix& features, SimilarityKind kind, std::size_t max_k, std::size_t jobs = 1);

  std::size_t size() const noexcept { return candidates_.size(); }
  std::size_t max_k() const noexcept { return max_k_; }
  SimilarityKind kind() const noexcept { return kind_; }

  /// Orders candidates for a graph whose node for feature row r is
  /// node_of_row[r]; equidistant candidates go to the lower node first. The
  /// returned lists are indexed by node.
  RankedNeighbors rank(std::span<const std::size_t> node_of_row) const;
  /// Ranking under the identity ordering (node i is row i).
  RankedNeighbors rank() const;

 private:
  struct Candidate {
    double key;
    std::uint32_t row;
  };
  std::vector<std::vector<Candidate>> candidates_;
  std::size_t max_k_;
  SimilarityKind kind_;
};

/// Undirected kNN graph: {i, j} is an edge iff j is among the k closest rows to
/// i or i among the k closest to j. Ties go to the lower row index. Requires
/// 1 <= k < rows.
EdgeSet knn_convert(const FeatureMatrix& features, SimilarityKind kind, std::size_t k, std::size_t jobs = 1);

/// One `i j` pair per line with 1-based node ids, i < j, sorted.
void write_edge_list(std::ostream& out, const EdgeSet& edges);
/// Reads the format of write_edge_list. Blank lines and `#` comments are skipped.
EdgeSet read_edge_list(std::istream& in);

}  // namespace mlculp
