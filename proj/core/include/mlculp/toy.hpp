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

// Built-in six-point example with three labels and one query node. The
// similarity edges are fixed rather than derived from kNN, and the expected
// Common-Neighbors scores are known exactly, so the example doubles as a
// self-test.

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mlculp/dataset.hpp"
#include "mlculp/leg.hpp"
#include "mlculp/predictors.hpp"
#include "mlculp/similarity.hpp"

namespace mlculp {

struct ToyExample {
  /// Six labeled rows (labels a, b, c) followed by the unlabeled query row.
  Dataset data;
  /// 0-based over the seven data rows in dataset order.
  EdgeSet similarity;
};

ToyExample toy_example();
/// MiLEG or BiLEG over the toy example.
LegGraph toy_graph(LegVariant variant);

namespace toy_expected {
inline constexpr std::array<double, 3> mileg_cn{2, 3, 3};
/// (a0, a1, b0, b1, c0, c1)
inline constexpr std::array<double, 6> bileg_cn{2, 2, 1, 3, 1, 3};
/// Raw-score MiCULP threshold that yields the reference prediction.
inline constexpr double raw_threshold = 3.0;
/// Labels a, b, c.
inline constexpr std::array<std::uint8_t, 3> prediction{0, 1, 1};
}  // namespace toy_expected

struct ToyCheck {
  bool passed = true;
  std::vector<std::string> mismatches;
};

/// Prints the score tables and predictions for `variant` (both when empty)
/// and compares them with `toy_expected`. Only `cn` has reference values.
ToyCheck run_toy(std::ostream& out, std::optional<LegVariant> variant, PredictorKind predictor);

}  // namespace mlculp
