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
#include <doctest.h>

#include <set>
#include <sstream>

#include "generators.hpp"
#include "mlculp/error.hpp"
#include "mlculp/leg.hpp"
#include "mlculp/predictors.hpp"
#include "mlculp/toy.hpp"

using namespace mlculp;

namespace {

std::set<std::uint32_t> data_neighbors(const LegGraph& g, NodeId v) {
  std::set<std::uint32_t> out;
  for (const auto& a : g.neighbors(v)) {
    if (g.role(a.node) != NodeRole::label) out.insert(a.node.value);
  }
  return out;
}

std::vector<std::size_t> column_sums(const LabelMatrix& y) {
  std::vector<std::size_t> sums(y.cols(), 0);
  for (std::size_t r = 0; r < y.rows(); ++r) {
    for (std::size_t c = 0; c < y.cols(); ++c) sums[c] += y(r, c);
  }
  return sums;
}

}  // namespace

TEST_CASE("node numbering is 1-based: train, test, then class nodes") {
  LabelMatrix y(3, 2, 0);
  y(0, 0) = y(1, 1) = y(2, 0) = 1;
  LegGraph bi(LegVariant::bileg, y, 2, EdgeSet{});
  CHECK(bi.train_node(0).value == 1);
  CHECK(bi.test_node(1).value == 5);
  CHECK(bi.positive_node(0).value == 6);
  CHECK(bi.negative_node(0).value == 7);
  CHECK(bi.positive_node(1).value == 8);
  CHECK(bi.negative_node(1).value == 9);
  CHECK(bi.role(NodeId(4)) == NodeRole::test);
  CHECK(bi.role(NodeId(9)) == NodeRole::label);
  CHECK_THROWS_AS(bi.label_node(0), VariantMismatch);
  CHECK_THROWS_AS(bi.neighbors(NodeId(10)), InvalidArgument);
  CHECK_THROWS_AS(bi.neighbors(NodeId(0)), InvalidArgument);

  LegGraph mi(LegVariant::mileg, y, 2, EdgeSet{});
  CHECK(mi.label_node(1).value == 7);
  CHECK_THROWS_AS(mi.positive_node(0), VariantMismatch);
  CHECK(to_string(LegVariant::bileg) == "bileg");
}

TEST_CASE("toy MiLEG: class degrees and the query's neighbors") {
  const LegGraph g = toy_graph(LegVariant::mileg);
  CHECK(g.degree(g.label_node(0)) == 4);
  CHECK(g.degree(g.label_node(1)) == 4);
  CHECK(g.degree(g.label_node(2)) == 3);
  CHECK(data_neighbors(g, g.test_node(0)) == std::set<std::uint32_t>{1, 2, 4, 6});
  CHECK(g.degree(g.test_node(0), EdgeKind::membership) == 0);
  CHECK(neighborhood(g, g.test_node(0)).size() == 4);
}

TEST_CASE("toy BiLEG: value-1 and value-0 degrees") {
  const LegGraph g = toy_graph(LegVariant::bileg);
  const std::size_t pos[] = {4, 4, 3}, neg[] = {2, 2, 3};
  for (std::size_t c = 0; c < 3; ++c) {
    CHECK(g.degree(g.positive_node(c)) == pos[c]);
    CHECK(g.degree(g.negative_node(c)) == neg[c]);
  }
}

TEST_CASE("LEG: one membership edge per train row and single-label guard") {
  gen::Rng rng(20);
  auto y = gen::single_labels(rng, 20, 3);
  LegGraph g(LegVariant::leg, y, 0, EdgeSet{});
  std::size_t total = 0;
  for (std::size_t c = 0; c < 3; ++c) total += g.degree(g.label_node(c));
  CHECK(total == 20);
  CHECK(g.num_class_nodes() == 3);
  LabelMatrix multi(2, 2, 1);
  CHECK_THROWS_WITH_AS(LegGraph(LegVariant::leg, multi, 0, EdgeSet{}), doctest::Contains("single-label required"),
                       InvalidArgument);
}

TEST_CASE("two-class LEG from features: class nodes and train degree >= k + 1") {
  Dataset d = gen::dataset(FeatureMatrix(0, 2), LabelMatrix(0, 2));
  const double pts[6][2] = {{0, 0}, {0, 1}, {1, 0}, {5, 5}, {5, 6}, {2, 2}};
  for (auto& p : pts) d.features.append_row(std::vector<double>{p[0], p[1]});
  for (int i = 0; i < 5; ++i) d.labels.append_row(std::vector<std::uint8_t>{i < 3 ? std::uint8_t{1} : std::uint8_t{0}, i < 3 ? std::uint8_t{0} : std::uint8_t{1}});
  auto g = build_leg(LabeledView::all(d), UnlabeledView::unlabeled_rows(d), SimilarityKind::euclidean, 2);
  CHECK(g.num_class_nodes() == 2);
  for (std::size_t i = 0; i < 5; ++i) CHECK(g.degree(g.train_node(i)) >= 3);
}

TEST_CASE("single train and test instance with k=1") {
  Dataset d = gen::dataset(FeatureMatrix(0, 1), LabelMatrix(0, 1));
  d.features.append_row(std::vector<double>{0.0});
  d.features.append_row(std::vector<double>{1.0});
  d.labels.append_row(std::vector<std::uint8_t>{1});
  auto g = build_leg(LabeledView::all(d), UnlabeledView::unlabeled_rows(d), SimilarityKind::euclidean, 1);
  CHECK(g.num_similarity_edges() == 1);
  CHECK(g.num_membership_edges() == 1);
}

TEST_CASE("MiLEG: all-zero labels give no membership edges; degrees equal column sums") {
  LegGraph empty(LegVariant::mileg, LabelMatrix(5, 3, 0), 1, EdgeSet{});
  CHECK(empty.num_membership_edges() == 0);
  gen::Rng rng(30);
  auto y = gen::labels(rng, 30, 5, 0.4);
  LegGraph g(LegVariant::mileg, y, 2, gen::edges(rng, 32, 0.1));
  auto sums = column_sums(y);
  for (std::size_t c = 0; c < 5; ++c) CHECK(g.degree(g.label_node(c)) == sums[c]);
}

TEST_CASE("BiLEG: all-ones labels isolate value-0 nodes; degrees follow column sums") {
  LegGraph ones(LegVariant::bileg, LabelMatrix(4, 2, 1), 1, EdgeSet{});
  for (std::size_t c = 0; c < 2; ++c) {
    CHECK(ones.degree(ones.negative_node(c)) == 0);
    CHECK(ones.degree(ones.positive_node(c)) == 4);
  }
  gen::Rng rng(31);
  auto y = gen::labels(rng, 30, 5, 0.3);
  LegGraph g(LegVariant::bileg, y, 0, EdgeSet{});
  auto sums = column_sums(y);
  for (std::size_t c = 0; c < 5; ++c) {
    CHECK(g.degree(g.positive_node(c)) == sums[c]);
    CHECK(g.degree(g.negative_node(c)) == 30 - sums[c]);
  }
}

TEST_CASE("property: conservation, BiLEG completeness, MiLEG/BiLEG consistency, determinism") {
  gen::Rng rng(32);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = rng.size(1, 40), m = rng.size(0, 10), labels = rng.size(1, 6);
    auto y = gen::labels(rng, n, labels, rng.real(0, 1));
    auto sim = gen::edges(rng, n + m, rng.real(0, 0.3));
    LegGraph mi(LegVariant::mileg, y, m, sim);
    LegGraph bi(LegVariant::bileg, y, m, sim);
    CHECK(bi.num_edges() == bi.num_similarity_edges() + bi.num_membership_edges());
    CHECK(bi.num_similarity_edges() == sim.size());
    CHECK(bi.num_membership_edges() == n * labels);
    std::set<std::pair<std::uint32_t, std::uint32_t>> sim_edges, member_edges;
    for (const auto& e : bi.edges()) {
      (e.kind == EdgeKind::similarity ? sim_edges : member_edges).insert({e.u.value, e.v.value});
    }
    for (const auto& p : sim_edges) CHECK(member_edges.count(p) == 0);
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t class_links = 0;
      for (const auto& a : bi.neighbors(bi.train_node(i))) class_links += bi.role(a.node) == NodeRole::label;
      CHECK(class_links == labels);
      for (std::size_t c = 0; c < labels; ++c) {
        auto linked = [&](NodeId cls) {
          for (const auto& a : bi.neighbors(cls)) {
            if (a.node == bi.train_node(i)) return true;
          }
          return false;
        };
        CHECK(linked(bi.positive_node(c)) != linked(bi.negative_node(c)));
      }
    }
    for (std::size_t c = 0; c < labels; ++c) {
      CHECK(bi.degree(bi.positive_node(c)) + bi.degree(bi.negative_node(c)) == n);
      std::vector<std::uint32_t> a, b;
      for (const auto& x : mi.neighbors(mi.label_node(c))) a.push_back(x.node.value);
      for (const auto& x : bi.neighbors(bi.positive_node(c))) b.push_back(x.node.value);
      CHECK(a == b);
    }
    CHECK(LegGraph(LegVariant::bileg, y, m, sim) == bi);
  }
}

TEST_CASE("similarity edges must stay within the data nodes") {
  LabelMatrix y(2, 1, 1);
  CHECK_THROWS_AS(LegGraph(LegVariant::mileg, y, 1, EdgeSet::from_pairs({{0, 3}})), InvalidArgument);
}

TEST_CASE("test-test edges can be dropped") {
  Dataset d = gen::dataset(FeatureMatrix(0, 1), LabelMatrix(0, 1));
  for (double v : {0.0, 10.0, 5.0, 5.1}) d.features.append_row(std::vector<double>{v});
  d.labels.append_row(std::vector<std::uint8_t>{1});
  d.labels.append_row(std::vector<std::uint8_t>{0});
  GraphOptions keep, drop;
  drop.test_test_edges = false;
  auto with = build_mileg(LabeledView::all(d), UnlabeledView::unlabeled_rows(d), SimilarityKind::euclidean, 1, keep);
  auto without = build_mileg(LabeledView::all(d), UnlabeledView::unlabeled_rows(d), SimilarityKind::euclidean, 1, drop);
  auto has_test_pair = [](const LegGraph& g) {
    for (const auto& e : g.edges()) {
      if (g.role(e.u) == NodeRole::test && g.role(e.v) == NodeRole::test) return true;
    }
    return false;
  };
  CHECK(has_test_pair(with));
  CHECK_FALSE(has_test_pair(without));
}

TEST_CASE("pooled features require equal widths") {
  Dataset a = gen::dataset(FeatureMatrix(2, 2, 0.0), LabelMatrix(2, 1, 1));
  Dataset b = gen::dataset(FeatureMatrix(1, 3, 0.0), LabelMatrix(0, 1));
  CHECK_THROWS_AS(pooled_features(LabeledView::all(a), UnlabeledView::all_rows(b)), InvalidArgument);
  CHECK(pooled_features(LabeledView::all(a), UnlabeledView::all_rows(a)).rows() == 4);
}

TEST_CASE("graph text export") {
  LabelMatrix y(2, 1, 0);
  y(0, 0) = 1;
  LegGraph g(LegVariant::mileg, y, 1, EdgeSet::from_pairs({{0, 2}}));
  std::ostringstream out;
  write_graph(out, g);
  CHECK(out.str() == "n 2 m 1 C 1 variant mileg\ns 1 3\nc 1 4\n");
}
