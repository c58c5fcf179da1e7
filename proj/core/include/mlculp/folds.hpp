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
#include <vector>

#include "mlculp/dataset.hpp"

namespace mlculp {

/// Fold index for every labeled instance.
struct FoldPlan {
  std::size_t num_folds = 0;
  std::vector<std::size_t> assignment;
  std::uint64_t seed = 0;

  /// Sizes of every fold, indexed by fold.
  std::vector<std::size_t> fold_sizes() const;
  /// Labeled row indices in fold `fold`, ascending.
  std::vector<std::size_t> members(std::size_t fold) const;
};

/// Seeded greedy iterative stratification over the label matrix.
///
/// Fold capacities are fixed up front (the first n % num_folds folds take one
/// extra instance), so sizes differ by at most one. Labels are processed rarest
/// first; each instance carrying the current label goes to the open fold that
/// still wants the most positives of it, then the most instances overall, then
/// the lowest index. Folds that would push a label past ceil(positives / folds)
/// + 1 are passed over while another open fold exists, and a final swap pass
/// moves positives out of any fold still above that ceiling. The seed only
/// shuffles the order instances are visited in.
FoldPlan make_folds(const LabelMatrix& labels, std::size_t num_folds, std::uint64_t seed);
FoldPlan make_folds(const Dataset& data, std::size_t num_folds, std::uint64_t seed);

/// Train/test partition of the labeled rows for one fold. Test labels live
/// apart from the test view so classifiers never see them.
struct FoldSplit {
  LabeledView train;
  UnlabeledView test;
  LabelMatrix test_truth;
};

FoldSplit split(const Dataset& data, const FoldPlan& plan, std::size_t test_fold);

}  // namespace mlculp
