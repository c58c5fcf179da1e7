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

#include "mlculp/metrics.hpp"

using namespace mlculp;

namespace {

LabelMatrix random_labels(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution on(0.2);
  LabelMatrix y;
  std::vector<std::uint8_t> row(cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (auto& v : row) v = on(rng) ? 1 : 0;
    y.append_row(row);
  }
  return y;
}

void all_metrics(benchmark::State& state) {
  const std::size_t rows = static_cast<std::size_t>(state.range(0));
  const std::size_t cols = static_cast<std::size_t>(state.range(1));
  const auto truth = random_labels(rows, cols, 1);
  const auto predicted = random_labels(rows, cols, 2);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_metrics(truth, predicted));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * rows * cols));
}

}  // namespace

BENCHMARK(all_metrics)->Args({200, 10})->Args({2407, 6})->Args({1702, 53});

BENCHMARK_MAIN();
