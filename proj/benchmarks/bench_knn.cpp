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

#include "mlculp/similarity.hpp"

using namespace mlculp;

namespace {

FeatureMatrix random_features(std::size_t rows, std::size_t cols) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  FeatureMatrix x;
  std::vector<double> row(cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (auto& v : row) v = dist(rng);
    x.append_row(row);
  }
  return x;
}

void knn(benchmark::State& state, SimilarityKind kind) {
  const auto x = random_features(static_cast<std::size_t>(state.range(0)), 72);
  for (auto _ : state) benchmark::DoNotOptimize(knn_convert(x, kind, 10));
  state.SetComplexityN(state.range(0));
}

void neighbor_index(benchmark::State& state) {
  const auto x = random_features(static_cast<std::size_t>(state.range(0)), 72);
  for (auto _ : state) {
    NeighborIndex index(x, SimilarityKind::euclidean, 45);
    for (std::size_t k : {1, 10, 45}) benchmark::DoNotOptimize(index.rank().edges(k));
  }
}

}  // namespace

BENCHMARK_CAPTURE(knn, cosine, SimilarityKind::cosine)->RangeMultiplier(2)->Range(128, 2048)->Complexity();
BENCHMARK_CAPTURE(knn, euclidean, SimilarityKind::euclidean)->RangeMultiplier(2)->Range(128, 2048)->Complexity();
BENCHMARK_CAPTURE(knn, manhattan, SimilarityKind::manhattan)->RangeMultiplier(2)->Range(128, 2048)->Complexity();
BENCHMARK(neighbor_index)->Arg(593)->Arg(2407);

BENCHMARK_MAIN();
