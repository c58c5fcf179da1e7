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
#include <benchmark/benchmark.h>

#include <random>

#include "mlculp/classifiers.hpp"
#include "mlculp/predictors.hpp"

using namespace mlculp;

namespace {

Dataset random_dataset(std::size_t rows, std::size_t labels) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  Dataset d;
  std::vector<double> x(16);
  std::vector<std::uint8_t> y(labels);
  for (std::size_t r = 0; r < rows; ++r) {
    for (auto& v : x) v = dist(rng);
    for (auto& v : y) v = dist(rng) < 0.25 ? 1 : 0;
    d.features.append_row(x);
    d.labels.append_row(y);
  }
  for (std::size_t c = 0; c < labels; ++c) d.label_names.push_back("l" + std::to_string(c));
  return d;
}

void score_rows(benchmark::State& state, LegVariant variant, PredictorKind kind) {
  const std::size_t rows = static_cast<std::size_t>(state.range(0));
  const Dataset data = random_dataset(rows, 6);
  std::vector<std::size_t> train, test;
  for (std::size_t r = 0; r < rows; ++r) (r % 10 == 0 ? test : train).push_back(r);
  const LabeledView tv(data, train);
  const UnlabeledView qv(data, test);
  const LegGraph graph = variant == LegVariant::mileg ? build_mileg(tv, qv, SimilarityKind::euclidean, 10)
                                                      : build_bileg(tv, qv, SimilarityKind::euclidean, 10);
  for (auto _ : state) benchmark::DoNotOptimize(score_all(graph, kind, variant == LegVariant::mileg));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * test.size()));
}

void end_to_end(benchmark::State& state) {
  const Dataset data = random_dataset(static_cast<std::size_t>(state.range(0)), 6);
  std::vector<std::size_t> train, test;
  for (std::size_t r = 0; r < data.features.rows(); ++r) (r % 10 == 0 ? test : train).push_back(r);
  ClassifierConfig config;
  config.k = 10;
  config.threshold = 0.5;
  for (auto _ : state) benchmark::DoNotOptimize(predict(config, LabeledView(data, train), UnlabeledView(data, test)));
}

}  // namespace

BENCHMARK_CAPTURE(score_rows, mileg_cn, LegVariant::mileg, PredictorKind::common_neighbors)->Arg(600)->Arg(2400);
BENCHMARK_CAPTURE(score_rows, mileg_aa, LegVariant::mileg, PredictorKind::adamic_adar)->Arg(600)->Arg(2400);
BENCHMARK_CAPTURE(score_rows, mileg_ra, LegVariant::mileg, PredictorKind::resource_allocation)->Arg(600)->Arg(2400);
BENCHMARK_CAPTURE(score_rows, bileg_cn, LegVariant::bileg, PredictorKind::common_neighbors)->Arg(600)->Arg(2400);
BENCHMARK(end_to_end)->Arg(600)->Arg(2400);

BENCHMARK_MAIN();
