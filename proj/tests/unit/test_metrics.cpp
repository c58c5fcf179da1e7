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

#include <algorithm>
#include <cmath>
#include <numeric>

#include "generators.hpp"
#include "mlculp/error.hpp"
#include "mlculp/metrics.hpp"
#include "oracles.hpp"

using namespace mlculp;

namespace {

LabelMatrix m(std::initializer_list<std::vector<std::uint8_t>> rows) {
  LabelMatrix out;
  for (const auto& r : rows) out.append_row(r);
  return out;
}

LabelMatrix complement(const LabelMatrix& y) {
  LabelMatrix out = y;
  for (std::size_t r = 0; r < y.rows(); ++r) {
    for (std::size_t c = 0; c < y.cols(); ++c) out(r, c) = 1 - y(r, c);
  }
  return out;
}

}  // namespace

TEST_CASE("hamming loss") {
  auto y = m({{1, 0}, {0, 1}});
  CHECK(hamming_loss(y, y) == 0.0);
  CHECK(hamming_loss(y, complement(y)) == 1.0);
  CHECK(hamming_loss(y, m({{1, 1}, {0, 1}})) == 0.25);
}

TEST_CASE("example F1") {
  CHECK(example_f1(m({{0, 1, 1}}), m({{0, 1, 1}})) == 1.0);
  CHECK(example_f1(m({{1, 0, 0}}), m({{0, 1, 0}})) == 0.0);
  CHECK(example_f1(m({{1, 1, 1}}), m({{0, 1, 1}})) == 0.8);
  CHECK(example_f1(m({{0, 0}}), m({{0, 0}})) == 1.0);
}

TEST_CASE("micro F1") {
  auto y = m({{1, 0}, {0, 1}});
  CHECK(micro_f1(y, y) == 1.0);
  CHECK(micro_f1(y, m({{1, 1}, {0, 1}})) == 0.8);
  CHECK(micro_f1(m({{0, 0}, {0, 0}}), m({{0, 0}, {0, 0}})) == 1.0);
}

TEST_CASE("macro F1") {
  auto y = m({{1, 0}, {0, 1}});
  CHECK(macro_f1(y, y).macro == 1.0);
  auto dead = m({{1, 0}, {0, 0}});
  auto r = macro_f1(dead, dead);
  CHECK(r.macro == 0.5);
  CHECK(r.per_label == std::vector<double>{1.0, 0.0});
}

TEST_CASE("shape mismatch") {
  CHECK_THROWS_AS(hamming_loss(m({{1, 0}}), m({{1, 0, 0}})), InvalidArgument);
  CHECK_THROWS_AS(evaluate_metrics(m({{1}}), m({{1}, {0}})), InvalidArgument);
}

TEST_CASE("metric names") {
  CHECK(parse_metric("example_f1") == Metric::example_f1);
  CHECK(parse_metric("hamming") == Metric::hamming_loss);
  CHECK(to_string(Metric::macro_f1) == "macro_f1");
  CHECK_FALSE(higher_is_better(Metric::hamming_loss));
  CHECK(higher_is_better(Metric::micro_f1));
  CHECK_THROWS_AS(parse_metric("auc"), InvalidArgument);
}

TEST_CASE("random 200x10 pairs equal the confusion-matrix oracle") {
  gen::Rng rng(200);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = rng.size(0, 200), cols = rng.size(1, 10);
    auto y = gen::labels(rng, rows, cols, rng.real(0, 0.6));
    auto p = gen::labels(rng, rows, cols, rng.real(0, 0.6));
    const auto report = evaluate_metrics(y, p);
    CHECK(std::abs(report.hamming_loss - oracle::hamming_loss(y, p)) <= 1e-12);
    CHECK(std::abs(report.example_f1 - oracle::example_f1(y, p)) <= 1e-12);
    CHECK(std::abs(report.micro_f1 - oracle::micro_f1(y, p)) <= 1e-12);
    CHECK(std::abs(report.macro_f1 - oracle::macro_f1(y, p)) <= 1e-12);
  }
}

TEST_CASE("property: symmetry, row permutation invariance, range, perfect prediction") {
  gen::Rng rng(201);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t rows = rng.size(1, 60), cols = rng.size(1, 8);
    auto y = gen::labels(rng, rows, cols, rng.real(0, 1));
    auto p = gen::labels(rng, rows, cols, rng.real(0, 1));
    CHECK(hamming_loss(y, p) == hamming_loss(p, y));
    std::vector<std::size_t> perm(rows);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng.engine());
    const auto a = evaluate_metrics(y, p);
    const auto b = evaluate_metrics(y.select_rows(perm), p.select_rows(perm));
    CHECK(a.hamming_loss == doctest::Approx(b.hamming_loss).epsilon(1e-12));
    CHECK(a.example_f1 == doctest::Approx(b.example_f1).epsilon(1e-12));
    CHECK(a.micro_f1 == b.micro_f1);
    CHECK(a.macro_f1 == b.macro_f1);
    for (double v : {a.hamming_loss, a.example_f1, a.micro_f1, a.macro_f1}) {
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
    }
    CHECK(a.macro_f1 == doctest::Approx(std::accumulate(a.per_label_f1.begin(), a.per_label_f1.end(), 0.0) /
                                        static_cast<double>(cols)));
    // every row and label non-degenerate
    LabelMatrix full = y;
    for (std::size_t r = 0; r < rows; ++r) full(r, r % cols) = 1;
    for (std::size_t c = 0; c < cols; ++c) full(c % rows, c) = 1;
    const auto perfect = evaluate_metrics(full, full);
    CHECK(perfect.example_f1 == 1.0);
    CHECK(perfect.micro_f1 == 1.0);
    CHECK(perfect.macro_f1 == 1.0);
  }
}

TEST_CASE("property: micro F1 lies between per-label extremes under equal support") {
  gen::Rng rng(202);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t rows = rng.size(4, 50), cols = rng.size(1, 6);
    const std::size_t support = rng.size(1, rows);
    LabelMatrix y(rows, cols, 0);
    for (std::size_t c = 0; c < cols; ++c) {
      std::vector<std::size_t> idx(rows);
      std::iota(idx.begin(), idx.end(), 0);
      std::shuffle(idx.begin(), idx.end(), rng.engine());
      for (std::size_t s = 0; s < support; ++s) y(idx[s], c) = 1;
    }
    auto p = gen::labels(rng, rows, cols, rng.real(0, 1));
    const auto report = evaluate_metrics(y, p);
    const auto [lo, hi] = std::minmax_element(report.per_label_f1.begin(), report.per_label_f1.end());
    CHECK(report.micro_f1 >= *lo - 1e-12);
    CHECK(report.micro_f1 <= *hi + 1e-12);
  }
}
