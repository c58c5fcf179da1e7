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
#include "mlculp/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

#include "mlculp/error.hpp"
#include "mlculp/parallel.hpp"

namespace mlculp {

SimilarityKind parse_similarity(std::string_view text) {
  if (text == "cosine") return SimilarityKind::cosine;
  if (text == "euclidean") return SimilarityKind::euclidean;
  if (text == "manhattan") return SimilarityKind::manhattan;
  throw InvalidArgument("unknown similarity '" + std::string(text) + "'");
}

std::string_view to_string(SimilarityKind kind) noexcept {
  switch (kind) {
    case SimilarityKind::cosine: return "cosine";
    case SimilarityKind::euclidean: return "euclidean";
    case SimilarityKind::manhattan: return "manhattan";
  }
  return "?";
}

double pairwise_score(std::span<const double> a, std::span<const double> b, SimilarityKind kind) {
  if (a.size() != b.size()) {
    throw InvalidArgument("pairwise_score: dimension mismatch (" + std::to_string(a.size()) + " vs " +
                          std::to_string(b.size()) + ")");
  }
  switch (kind) {
    case SimilarityKind::euclidean: {
      double sum = 0.0;
      for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        sum += d * d;
      }
      return std::sqrt(sum);
    }
    case SimilarityKind::manhattan: {
      double sum = 0.0;
      for (std::size_t i = 0; i < a.size(); ++i) sum += std::abs(a[i] - b[i]);
      return sum;
    }
    case SimilarityKind::cosine: {
      double dot = 0.0, na = 0.0, nb = 0.0;
      for (std::size_t i = 0; i < a.size(); ++i) {
        dot += a[i] * b[i];
        na += a[i] * a[i];
        nb += b[i] * b[i];
      }
      if (na == 0.0 || nb == 0.0) return 0.0;
      return std::clamp(dot / (std::sqrt(na) * std::sqrt(nb)), -1.0, 1.0);
    }
  }
  return 0.0;
}

double dissimilarity(std::span<const double> a, std::span<const double> b, SimilarityKind kind) {
  const double s = pairwise_score(a, b, kind);
  return kind == SimilarityKind::cosine ? -s : s;
}

// ---------------------------------------------------------------------------
// EdgeSet

EdgeSet EdgeSet::from_pairs(std::vector<Edge> pairs) {
  EdgeSet set;
  for (auto& [u, v] : pairs) {
    if (u == v) throw InvalidArgument("edge set: self-loop on node " + std::to_string(u));
    if (u > v) std::swap(u, v);
    set.max_node_ = std::max(set.max_node_, v);
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  set.edges_ = std::move(pairs);
  return set;
}

bool EdgeSet::contains(std::uint32_t u, std::uint32_t v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

EdgeSet EdgeSet::without_edges_among(std::uint32_t first) const {
  std::vector<Edge> kept;
  kept.reserve(edges_.size());
  for (const auto& e : edges_) {
    if (e.first < first) kept.push_back(e);
  }
  return from_pairs(std::move(kept));
}

// ---------------------------------------------------------------------------
// Neighbor lists

EdgeSet RankedNeighbors::edges(std::size_t k) const {
  if (k > max_k_) {
    throw InvalidArgument("RankedNeighbors::edges: k=" + std::to_string(k) + " exceeds the indexed maximum " +
                          std::to_string(max_k_));
  }
  std::vector<EdgeSet::Edge> pairs;
  pairs.reserve(lists_.size() * k);
  for (std::size_t node = 0; node < lists_.size(); ++node) {
    for (std::size_t r = 0; r < k; ++r) {
      pairs.emplace_back(static_cast<std::uint32_t>(node), lists_[node][r]);
    }
  }
  return EdgeSet::from_pairs(std::move(pairs));
}

NeighborIndex::NeighborIndex(const FeatureMatrix& features, SimilarityKind kind, std::size_t max_k,
                             std::size_t jobs)
    : candidates_(features.rows()), max_k_(max_k), kind_(kind) {
  const std::size_t rows = features.rows();
  if (max_k < 1) throw InvalidArgument("knn: k must be at least 1");
  if (max_k >= rows) {
    throw InvalidArgument("knn: k=" + std::to_string(max_k) + " needs more than " + std::to_string(rows) +
                          " instances");
  }
  parallel_for(rows, jobs, [&](std::size_t i) {
    std::vector<Candidate> all;
    all.reserve(rows - 1);
    for (std::size_t j = 0; j < rows; ++j) {
      if (j == i) continue;
      all.push_back({dissimilarity(features.row(i), features.row(j), kind), static_cast<std::uint32_t>(j)});
    }
    auto by_key = [](const Candidate& a, const Candidate& b) { return a.key < b.key; };
    std::nth_element(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(max_k - 1), all.end(), by_key);
    const double cutoff = all[max_k - 1].key;
    auto& kept = candidates_[i];
    for (const auto& c : all) {
      if (c.key <= cutoff) kept.push_back(c);
    }
    std::sort(kept.begin(), kept.end(),
              [](const Candidate& a, const Candidate& b) { return a.key < b.key || (a.key == b.key && a.row < b.row); });
  });
}

RankedNeighbors NeighborIndex::rank(std::span<const std::size_t> node_of_row) const {
  if (node_of_row.size() != candidates_.size()) {
    throw InvalidArgument("NeighborIndex::rank: ordering covers " + std::to_string(node_of_row.size()) +
                          " rows, index has " + std::to_string(candidates_.size()));
  }
  std::vector<std::vector<std::uint32_t>> lists(candidates_.size());
  std::vector<Candidate> scratch;
  for (std::size_t row = 0; row < candidates_.size(); ++row) {
    scratch = candidates_[row];
    for (auto& c : scratch) c.row = static_cast<std::uint32_t>(node_of_row[c.row]);
    // candidates are already ordered by key; only equal-key runs need reordering
    std::stable_sort(scratch.begin(), scratch.end(), [](const Candidate& a, const Candidate& b) {
      return a.key < b.key || (a.key == b.key && a.row < b.row);
    });
    auto& out = lists[node_of_row[row]];
    out.reserve(scratch.size());
    for (const auto& c : scratch) out.push_back(c.row);
  }
  return RankedNeighbors(std::move(lists), max_k_);
}

RankedNeighbors NeighborIndex::rank() const {
  std::vector<std::size_t> identity(candidates_.size());
  std::iota(identity.begin(), identity.end(), 0);
  return rank(identity);
}

EdgeSet knn_convert(const FeatureMatrix& features, SimilarityKind kind, std::size_t k, std::size_t jobs) {
  if (features.rows() < 2) throw InvalidArgument("knn_convert: need at least 2 instances");
  return NeighborIndex(features, kind, k, jobs).rank().edges(k);
}

// ---------------------------------------------------------------------------
// Edge-list files

void write_edge_list(std::ostream& out, const EdgeSet& edges) {
  for (const auto& [u, v] : edges) out << (u + 1) << ' ' << (v + 1) << '\n';
}

EdgeSet read_edge_list(std::istream& in) {
  std::vector<EdgeSet::Edge> pairs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    long long u = 0, v = 0;
    if (!(fields >> u)) continue;
    std::string rest;
    if (!(fields >> v) || (fields >> rest) || u < 1 || v < 1) {
      throw InvalidArgument("edge list: malformed line " + std::to_string(line_no));
    }
    pairs.emplace_back(static_cast<std::uint32_t>(u - 1), static_cast<std::uint32_t>(v - 1));
  }
  return EdgeSet::from_pairs(std::move(pairs));
}

}  // namespace mlculp
