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

#include <sstream>

#include "generators.hpp"
#include "mlculp/classifiers.hpp"
#include "mlculp/error.hpp"
#include "mlculp/toy.hpp"
#include "oracles.hpp"

using namespace mlculp;

namespace {

ScoreMatrix scores_of(std::initializer_list<std::vector<double>> rows, bool normalized = false) {
  ScoreMatrix s;
  for (const auto& r : rows) s.values.append_row(r);
  s.normalized = normalized;
  return s;
}

std::vector<std::uint8_t> row(const LabelMatrix& y, std::size_t r) {
  auto v = y.row(r);
  return {v.begin(), v.end()};
}

}  // namespace

TEST_SUITE("decisions") {
  TEST_CASE("argmax ties go to the lowest label; zero rows are flagged") {
    auto toy = argmax_labels(scores_of({{2, 3, 3}}));
    CHECK(toy.labels[0] == 1);
    CHECK_FALSE(toy.zero_confidence[0]);
    auto single = argmax_labels(scores_of({{0, 0, 1.5}}));
    CHECK(single.labels[0] == 2);
    auto zero = argmax_labels(scores_of({{0, 0, 0}}));
    CHECK(zero.labels[0] == 0);
    CHECK(zero.zero_confidence[0]);
    CHECK(one_hot(toy, 3)(0, 1) == 1);
  }

  TEST_CASE("thresholds: >= by default, strict on request, fallback") {
    auto raw = scores_of({{2, 3, 3}});
    CHECK(row(threshold_labels(raw, 3.0, false, Fallback::none), 0) == std::vector<std::uint8_t>{0, 1, 1});
    CHECK(row(threshold_labels(raw, 3.0, true, Fallback::none), 0) == std::vector<std::uint8_t>{0, 0, 0});
    CHECK(row(threshold_labels(raw, 3.0, true, Fallback::top1), 0) == std::vector<std::uint8_t>{0, 1, 0});
    auto norm = scores_of({{2.0 / 3.0, 1, 1}}, true);
    CHECK(row(threshold_labels(norm, 0.9, false, Fallback::none), 0) == std::vector<std::uint8_t>{0, 1, 1});
    CHECK(row(threshold_labels(norm, 0.0, false, Fallback::none), 0) == std::vector<std::uint8_t>{1, 1, 1});
    auto zero = scores_of({{0, 0, 0}});
    auto fallback = threshold_labels(zero, 0.5, false, Fallback::top1);
    CHECK(row(fallback, 0) == std::vector<std::uint8_t>{1, 0, 0});
  }

  TEST_CASE("pair comparison: ties give 0") {
    // (value-1, value-0) per label
    auto y = compare_pairs(scores_of({{2, 2, 3, 1, 3, 1}, {0, 0, 0, 1, 1, 0}}));
    CHECK(row(y, 0) == std::vector<std::uint8_t>{0, 1, 1});
    CHECK(row(y, 1) == std::vector<std::uint8_t>{0, 0, 1});
    CHECK_THROWS_AS(compare_pairs(scores_of({{1, 2, 3}})), InvalidArgument);
  }
}

TEST_SUITE("classifiers") {
  TEST_CASE("toy: MiCULP at raw t=3 and BiCULP both give {b,c}") {
    const std::vector<std::uint8_t> bc{0, 1, 1};
    MiculpOptions raw;
    raw.threshold = 3.0;
    raw.normalize = false;
    CHECK(row(miculp_predict(toy_graph(LegVariant::mileg), PredictorKind::common_neighbors, raw), 0) == bc);
    MiculpOptions norm;
    norm.threshold = 0.9;
    CHECK(row(miculp_predict(toy_graph(LegVariant::mileg), PredictorKind::common_neighbors, norm), 0) == bc);
    CHECK(row(biculp_predict(toy_graph(LegVariant::bileg), PredictorKind::common_neighbors), 0) == bc);
  }

  TEST_CASE("variant mismatches are rejected") {
    CHECK_THROWS_AS(culp_predict(toy_graph(LegVariant::mileg), PredictorKind::common_neighbors), VariantMismatch);
    CHECK_THROWS_AS(biculp_predict(toy_graph(LegVariant::mileg), PredictorKind::common_neighbors), VariantMismatch);
    CHECK_THROWS_AS(miculp_predict(toy_graph(LegVariant::bileg), PredictorKind::common_neighbors, {}),
                    VariantMismatch);
  }

  TEST_CASE("CULP: the only connected class wins") {
    LabelMatrix y(2, 3, 0);
    y(0, 1) = y(1, 1) = 1;
    LegGraph g(LegVariant::leg, y, 1, EdgeSet::from_pairs({{0, 2}}));
    auto p = culp_predict(g, PredictorKind::common_neighbors);
    CHECK(p.labels[0] == 1);
    CHECK_FALSE(p.zero_confidence[0]);
  }

  TEST_CASE("BiCULP: a label without positive training rows is never predicted") {
    gen::Rng rng(9);
    auto y = gen::labels(rng, 15, 3, 0.5);
    for (std::size_t r = 0; r < 15; ++r) y(r, 2) = 0;
    LegGraph g(LegVariant::bileg, y, 5, gen::edges(rng, 20, 0.3));
    auto p = biculp_predict(g, PredictorKind::resource_allocation);
    for (std::size_t r = 0; r < 5; ++r) CHECK(p(r, 2) == 0);
  }

  TEST_CASE("BiCULP end to end equals a straight-line reimplementation") {
    gen::Rng rng(15);
    for (int trial = 0; trial < 20; ++trial) {
      Dataset d = gen::dataset(gen::features(rng, 20, 3, false), gen::labels(rng, 15, 4, 0.4));
      auto train = LabeledView::all(d);
      auto test = UnlabeledView::unlabeled_rows(d);
      ClassifierConfig config;
      config.algorithm = Algorithm::biculp;
      config.k = 3;
      config.similarity = SimilarityKind::euclidean;
      config.predictor = PredictorKind::common_neighbors;
      const LabelMatrix got = predict(config, train, test);

      auto pairs = oracle::knn_edges(d.features, SimilarityKind::euclidean, 3);
      LegGraph g(LegVariant::bileg, d.labels, 5, EdgeSet::from_pairs({pairs.begin(), pairs.end()}));
      for (std::size_t t = 0; t < 5; ++t) {
        for (std::size_t c = 0; c < 4; ++c) {
          const double one =
              oracle::link_score(g, g.test_node(t), g.positive_node(c), PredictorKind::common_neighbors);
          const double zero =
              oracle::link_score(g, g.test_node(t), g.negative_node(c), PredictorKind::common_neighbors);
          CHECK(got(t, c) == (one > zero ? 1 : 0));
        }
      }
    }
  }

  TEST_CASE("property: MiCULP threshold monotonicity and t=1 argmax set") {
    gen::Rng rng(16);
    const double ts[] = {0.0, 0.25, 0.5, 0.75, 1.0};
    for (int trial = 0; trial < 60; ++trial) {
      const LegGraph g = gen::graph(rng, LegVariant::mileg, 80);
      const auto kind = static_cast<PredictorKind>(rng.size(0, 2));
      std::vector<LabelMatrix> preds;
      for (double t : ts) {
        MiculpOptions o;
        o.threshold = t;
        preds.push_back(miculp_predict(g, kind, o));
      }
      for (std::size_t a = 1; a < preds.size(); ++a) {
        for (std::size_t r = 0; r < g.num_test(); ++r) {
          for (std::size_t c = 0; c < g.num_labels(); ++c) CHECK(preds[a](r, c) <= preds[a - 1](r, c));
        }
      }
      const auto raw = score_all(g, kind, false);
      for (std::size_t r = 0; r < g.num_test(); ++r) {
        double best = 0;
        for (std::size_t c = 0; c < raw.cols(); ++c) best = std::max(best, raw(r, c));
        if (best == 0) continue;
        for (std::size_t c = 0; c < raw.cols(); ++c) CHECK(preds.back()(r, c) == (raw(r, c) == best ? 1 : 0));
      }
    }
  }

  TEST_CASE("property: BiCULP flips strict decisions when training labels are complemented") {
    gen::Rng rng(17);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t n = rng.size(2, 30), m = rng.size(1, 6), labels = rng.size(1, 5);
      auto y = gen::labels(rng, n, labels, rng.real(0.1, 0.9));
      LabelMatrix flipped = y;
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < labels; ++c) flipped(r, c) = 1 - y(r, c);
      }
      auto sim = gen::edges(rng, n + m, 0.2);
      LegGraph g(LegVariant::bileg, y, m, sim);
      LegGraph h(LegVariant::bileg, flipped, m, sim);
      const auto kind = static_cast<PredictorKind>(rng.size(0, 2));
      const auto s = score_all(g, kind, false);
      const auto a = biculp_predict(g, kind);
      const auto b = biculp_predict(h, kind);
      for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < labels; ++c) {
          if (s(r, 2 * c) != s(r, 2 * c + 1)) {
            CHECK(a(r, c) != b(r, c));
          } else {
            CHECK(a(r, c) == 0);
            CHECK(b(r, c) == 0);
          }
        }
      }
    }
  }

  TEST_CASE("property: prediction is deterministic") {
    gen::Rng rng(18);
    Dataset d = gen::dataset(gen::features(rng, 40, 4, false), gen::labels(rng, 30, 3, 0.4));
    ClassifierConfig config;
    config.threshold = 0.5;
    config.k = 4;
    auto a = predict(config, LabeledView::all(d), UnlabeledView::unlabeled_rows(d));
    auto b = predict(config, LabeledView::all(d), UnlabeledView::unlabeled_rows(d), 3);
    CHECK(a == b);
  }
}

TEST_SUITE("config") {
  TEST_CASE("validation") {
    ClassifierConfig c;
    CHECK_THROWS_AS(c.validate(), InvalidArgument);
    c.threshold = 0.5;
    CHECK_NOTHROW(c.validate());
    c.threshold = 1.5;
    CHECK_THROWS_AS(c.validate(), InvalidArgument);
    c.normalize = false;
    CHECK_NOTHROW(c.validate());
    c.k = 0;
    CHECK_THROWS_AS(c.validate(), InvalidArgument);
    ClassifierConfig bi;
    bi.algorithm = Algorithm::biculp;
    CHECK_NOTHROW(bi.validate());
    bi.threshold = 0.5;
    CHECK_THROWS_AS(bi.validate(), InvalidArgument);
  }

  TEST_CASE("names") {
    CHECK(parse_algorithm("biculp") == Algorithm::biculp);
    CHECK(variant_for(Algorithm::culp) == LegVariant::leg);
    CHECK(parse_fallback("top1") == Fallback::top1);
    CHECK_THROWS_AS(parse_algorithm("knn"), InvalidArgument);
    CHECK_THROWS_AS(parse_fallback("all"), InvalidArgument);
  }

  TEST_CASE("prediction CSV") {
    LabelMatrix y(2, 3, 0);
    y(0, 1) = y(0, 2) = 1;
    std::ostringstream plain, with_ids;
    write_predictions(plain, y, {"a", "b", "c"});
    CHECK(plain.str() == "a,b,c\n0,1,1\n0,0,0\n");
    write_predictions(with_ids, y, {"a", "b", "c"}, {"i", "j"});
    CHECK(with_ids.str() == "id,a,b,c\ni,0,1,1\nj,0,0,0\n");
  }
}
