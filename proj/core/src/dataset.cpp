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
#include "mlculp/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "mlculp/error.hpp"

namespace mlculp {

void Dataset::validate() const {
  if (labels.cols() != label_names.size() && labels.rows() > 0) {
    throw InvalidArgument("dataset: label matrix has " + std::to_string(labels.cols()) +
                          " columns but " + std::to_string(label_names.size()) + " label names");
  }
  if (labels.rows() > features.rows()) {
    throw InvalidArgument("dataset: more label rows than feature rows");
  }
  if (!feature_names.empty() && feature_names.size() != features.cols()) {
    throw InvalidArgument("dataset: feature name count does not match feature columns");
  }
  if (!ids.empty() && ids.size() != features.rows()) {
    throw InvalidArgument("dataset: id count does not match feature rows");
  }
  for (std::size_t r = 0; r < labels.rows(); ++r) {
    for (std::size_t c = 0; c < labels.cols(); ++c) {
      if (labels(r, c) > 1) {
        throw InvalidArgument("dataset: label (" + std::to_string(r) + ", " +
                              std::to_string(c) + ") is not binary");
      }
    }
  }
  for (std::size_t r = 0; r < features.rows(); ++r) {
    for (std::size_t c = 0; c < features.cols(); ++c) {
      if (!std::isfinite(features(r, c))) {
        throw InvalidArgument("dataset: feature (" + std::to_string(r) + ", " +
                              std::to_string(c) + ") is not finite");
      }
    }
  }
}

void min_max_scale(FeatureMatrix& features) {
  for (std::size_t c = 0; c < features.cols(); ++c) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < features.rows(); ++r) {
      lo = std::min(lo, features(r, c));
      hi = std::max(hi, features(r, c));
    }
    const double span = hi - lo;
    for (std::size_t r = 0; r < features.rows(); ++r) {
      features(r, c) = span > 0.0 ? (features(r, c) - lo) / span : 0.0;
    }
  }
}

namespace {

std::vector<std::size_t> iota_rows(std::size_t begin, std::size_t end) {
  std::vector<std::size_t> rows(end - begin);
  std::iota(rows.begin(), rows.end(), begin);
  return rows;
}

}  // namespace

LabeledView::LabeledView(const Dataset& data, std::vector<std::size_t> rows)
    : data_(&data), rows_(std::move(rows)) {
  for (auto r : rows_) {
    if (r >= data.num_labeled()) {
      throw InvalidArgument("labeled view: row " + std::to_string(r) + " has no labels");
    }
  }
}

LabeledView LabeledView::all(const Dataset& data) {
  return LabeledView(data, iota_rows(0, data.num_labeled()));
}

UnlabeledView::UnlabeledView(const Dataset& data, std::vector<std::size_t> rows)
    : data_(&data), rows_(std::move(rows)) {
  for (auto r : rows_) {
    if (r >= data.features.rows()) {
      throw InvalidArgument("unlabeled view: row " + std::to_string(r) + " out of range");
    }
  }
}

UnlabeledView UnlabeledView::all_rows(const Dataset& data) {
  return UnlabeledView(data, iota_rows(0, data.features.rows()));
}

UnlabeledView UnlabeledView::unlabeled_rows(const Dataset& data) {
  return UnlabeledView(data, iota_rows(data.num_labeled(), data.features.rows()));
}

}  // namespace mlculp
