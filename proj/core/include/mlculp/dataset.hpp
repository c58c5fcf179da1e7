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
#include <span>
#include <string>
#include <vector>

#include "mlculp/matrix.hpp"

namespace mlculp {

/// Features for every instance plus binary labels for the leading labeled rows.
///
/// Rows [0, labels.rows()) are labeled, the rest are unlabeled. Immutable once
/// handed to the rest of the library; share it by const reference.
struct Dataset {
  std::string name;
  FeatureMatrix features;
  LabelMatrix labels;
  std::vector<std::string> label_names;
  /// One name per feature column (after one-hot encoding).
  std::vector<std::string> feature_names;
  /// Optional external identifiers, one per feature row when present.
  std::vector<std::string> ids;
  /// Attribute count before nominal attributes were one-hot encoded.
  std::size_t source_attribute_count = 0;

  std::size_t num_labeled() const noexcept { return labels.rows(); }
  std::size_t num_unlabeled() const noexcept { return features.rows() - labels.rows(); }
  std::size_t num_features() const noexcept { return features.cols(); }
  std::size_t num_labels() const noexcept { return label_names.size(); }

  /// Throws InvalidArgument when an invariant is broken (binary labels,
  /// matching label width, labeled rows <= feature rows, finite features).
  void validate() const;
};

/// Rescales every feature column to [0, 1]. Constant columns become 0.
void min_max_scale(FeatureMatrix& features);

/// Labeled rows of a dataset seen by a classifier: features and labels.
class LabeledView {
 public:
  LabeledView(const Dataset& data, std::vector<std::size_t> rows);
  static LabeledView all(const Dataset& data);

  std::size_t size() const noexcept { return rows_.size(); }
  std::size_t num_labels() const noexcept { return data_->num_labels(); }
  std::size_t num_features() const noexcept { return data_->num_features(); }
  std::span<const double> features(std::size_t i) const { return data_->features.row(rows_[i]); }
  std::span<const std::uint8_t> labels(std::size_t i) const { return data_->labels.row(rows_[i]); }
  const std::vector<std::string>& label_names() const noexcept { return data_->label_names; }
  const std::vector<std::size_t>& rows() const noexcept { return rows_; }
  const Dataset& dataset() const noexcept { return *data_; }

  FeatureMatrix feature_matrix() const { return data_->features.select_rows(rows_); }
  LabelMatrix label_matrix() const { return data_->labels.select_rows(rows_); }

 private:
  const Dataset* data_;
  std::vector<std::size_t> rows_;
};

/// Rows a classifier must label. Exposes features only.
class UnlabeledView {
 public:
  UnlabeledView(const Dataset& data, std::vector<std::size_t> rows);
  /// Every feature row of `data`, labeled or not.
  static UnlabeledView all_rows(const Dataset& data);
  /// Only the rows of `data` that carry no labels.
  static UnlabeledView unlabeled_rows(const Dataset& data);

  std::size_t size() const noexcept { return rows_.size(); }
  std::size_t num_features() const noexcept { return data_->num_features(); }
  std::span<const double> features(std::size_t i) const { return data_->features.row(rows_[i]); }
  const std::vector<std::size_t>& rows() const noexcept { return rows_; }
  const Dataset& dataset() const noexcept { return *data_; }

  FeatureMatrix feature_matrix() const { return data_->features.select_rows(rows_); }

 private:
  const Dataset* data_;
  std::vector<std::size_t> rows_;
};

}  // namespace mlculp
