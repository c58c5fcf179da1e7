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
#include "mlculp/folds.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>

#include "mlculp/error.hpp"

namespace mlculp {

namespace {

// std::shuffle is implementation-defined; this one is reproducible everywhere.
void shuffle(std::vector<std::size_t>& v, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (std::size_t i = v.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace

std::vector<std::size_t> FoldPlan::fold_sizes() const {
  std::vector<std::size_t> sizes(num_folds, 0);
  for (auto f : assignment) ++sizes[f];
  return sizes;
}

std::vector<std::size_t> FoldPlan::members(std::size_t fold) const {
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    if (assignment[i] == fold) rows.push_back(i);
  }
  return rows;
}

FoldPlan make_folds(const LabelMatrix& labels, std::size_t num_folds, std::uint64_t seed) {
  const std::size_t n = labels.rows();
  const std::size_t num_labels = labels.cols();
  if (num_folds < 2) throw InvalidArgument("make_folds: need at least 2 folds");
  if (num_folds > n) {
    throw InvalidArgument("make_folds: " + std::to_string(num_folds) + " folds requested for " +
                          std::to_string(n) + " labeled instances");
  }

  std::vector<std::size_t> capacity(num_folds, n / num_folds);
  for (std::size_t j = 0; j < n % num_folds; ++j) ++capacity[j];

  std::vector<std::size_t> remaining(num_labels, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < num_labels; ++c) remaining[c] += labels(i, c);
  }
  // desire[j][c]: positives of label c fold j still wants
  std::vector<std::vector<double>> desire(num_folds, std::vector<double>(num_labels));
  for (std::size_t j = 0; j < num_folds; ++j) {
    for (std::size_t c = 0; c < num_labels; ++c) {
      desire[j][c] = static_cast<double>(remaining[c]) * static_cast<double>(capacity[j]) / static_cast<double>(n);
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  shuffle(order, seed);

  // cap on the positives of label c any one fold may take while an
  // alternative exists
  std::vector<std::size_t> ceiling(num_labels);
  for (std::size_t c = 0; c < num_labels; ++c) ceiling[c] = (remaining[c] + num_folds - 1) / num_folds + 1;
  std::vector<std::vector<std::size_t>> positives(num_folds, std::vector<std::size_t>(num_labels, 0));

  FoldPlan plan{num_folds, std::vector<std::size_t>(n, num_folds), seed};
  auto place = [&](std::size_t i, std::size_t fold) {
    plan.assignment[i] = fold;
    --capacity[fold];
    for (std::size_t c = 0; c < num_labels; ++c) {
      if (labels(i, c)) {
        desire[fold][c] -= 1.0;
        ++positives[fold][c];
        --remaining[c];
      }
    }
  };
  auto fits = [&](std::size_t i, std::size_t fold) {
    for (std::size_t c = 0; c < num_labels; ++c) {
      if (labels(i, c) && positives[fold][c] + 1 > ceiling[c]) return false;
    }
    return true;
  };

  for (;;) {
    std::size_t label = num_labels;
    for (std::size_t c = 0; c < num_labels; ++c) {
      if (remaining[c] > 0 && (label == num_labels || remaining[c] < remaining[label])) label = c;
    }
    if (label == num_labels) break;
    for (std::size_t i : order) {
      if (plan.assignment[i] != num_folds || !labels(i, label)) continue;
      std::size_t best = num_folds;
      for (bool strict : {true, false}) {
        for (std::size_t j = 0; j < num_folds; ++j) {
          if (capacity[j] == 0 || (strict && !fits(i, j))) continue;
          if (best == num_folds || desire[j][label] > desire[best][label] ||
              (desire[j][label] == desire[best][label] && capacity[j] > capacity[best])) {
            best = j;
          }
        }
        if (best != num_folds) break;
      }
      place(i, best);
    }
  }

  for (std::size_t i : order) {
    if (plan.assignment[i] != num_folds) continue;
    std::size_t best = 0;
    for (std::size_t j = 1; j < num_folds; ++j) {
      if (capacity[j] > capacity[best]) best = j;
    }
    place(i, best);
  }

  // swap pass: move positives out of folds that still exceed a ceiling
  auto excess = [&](std::size_t fold, std::size_t c) {
    return positives[fold][c] > ceiling[c] ? positives[fold][c] - ceiling[c] : 0;
  };
  auto swap_gain = [&](std::size_t a, std::size_t fa, std::size_t b, std::size_t fb) {
    long before = 0, after = 0;
    for (std::size_t c = 0; c < num_labels; ++c) {
      if (labels(a, c) == labels(b, c)) continue;
      before += static_cast<long>(excess(fa, c) + excess(fb, c));
      const long shift = labels(a, c) ? 1 : -1;
      const long pa = static_cast<long>(positives[fa][c]) - shift;
      const long pb = static_cast<long>(positives[fb][c]) + shift;
      const long cap = static_cast<long>(ceiling[c]);
      after += std::max(0L, pa - cap) + std::max(0L, pb - cap);
    }
    return before - after;
  };
  auto move = [&](std::size_t i, std::size_t from, std::size_t to) {
    plan.assignment[i] = to;
    for (std::size_t c = 0; c < num_labels; ++c) {
      if (labels(i, c)) {
        --positives[from][c];
        ++positives[to][c];
      }
    }
  };
  for (bool improved = true; improved;) {
    improved = false;
    for (std::size_t fa = 0; fa < num_folds && !improved; ++fa) {
      for (std::size_t c = 0; c < num_labels && !improved; ++c) {
        if (excess(fa, c) == 0) continue;
        for (std::size_t a = 0; a < n && !improved; ++a) {
          if (plan.assignment[a] != fa || !labels(a, c)) continue;
          for (std::size_t b = 0; b < n && !improved; ++b) {
            const std::size_t fb = plan.assignment[b];
            if (fb == fa || labels(b, c) || swap_gain(a, fa, b, fb) <= 0) continue;
            move(a, fa, fb);
            move(b, fb, fa);
            improved = true;
          }
        }
      }
    }
  }
  return plan;
}

FoldPlan make_folds(const Dataset& data, std::size_t num_folds, std::uint64_t seed) {
  return make_folds(data.labels, num_folds, seed);
}

FoldSplit split(const Dataset& data, const FoldPlan& plan, std::size_t test_fold) {
  if (test_fold >= plan.num_folds) {
    throw InvalidArgument("split: fold " + std::to_string(test_fold) + " out of range [0, " +
                          std::to_string(plan.num_folds) + ")");
  }
  if (plan.assignment.size() != data.num_labeled()) {
    throw InvalidArgument("split: fold plan does not match the dataset");
  }
  std::vector<std::size_t> train_rows;
  std::vector<std::size_t> test_rows;
  for (std::size_t i = 0; i < plan.assignment.size(); ++i) {
    (plan.assignment[i] == test_fold ? test_rows : train_rows).push_back(i);
  }
  LabelMatrix truth = data.labels.select_rows(test_rows);
  return FoldSplit{LabeledView(data, std::move(train_rows)), UnlabeledView(data, std::move(test_rows)),
                   std::move(truth)};
}

}  // namespace mlculp
