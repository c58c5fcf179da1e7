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

// Multi-label evaluation measures over binary matrices (rows = instances,
// columns = labels). Zero-division conventions:
//
//   example F1   a row where truth and prediction are both empty scores 1
//   micro F1     1 when 2TP + FP + FN == 0
//   macro F1     a label with 2TP + FP + FN == 0 contributes 0
//
// Every function throws InvalidArgument on a shape mismatch.

#include <string_view>
#include <vector>

#include "mlculp/matrix.hpp"

namespace mlculp {

enum class Metric { hamming_loss, example_f1, micro_f1, macro_f1 };

Metric parse_metric(std::string_view text);
std::string_view to_string(Metric metric) noexcept;
/// Only hamming loss is lower-is-better.
bool higher_is_better(Metric metric) noexcept;

struct MetricReport {
  double hamming_loss = 0.0;
  double example_f1 = 0.0;
  double micro_f1 = 0.0;
  double macro_f1 = 0.0;
  std::vector<double> per_label_f1;

  double get(Metric metric) const noexcept;
};

struct MacroF1 {
  double macro = 0.0;
  std::vector<double> per_label;
};

double hamming_loss(const LabelMatrix& truth, const LabelMatrix& predicted);
double example_f1(const LabelMatrix& truth, const LabelMatrix& predicted);
double micro_f1(const LabelMatrix& truth, const LabelMatrix& predicted);
MacroF1 macro_f1(const LabelMatrix& truth, const LabelMatrix& predicted);

MetricReport evaluate_metrics(const LabelMatrix& truth, const LabelMatrix& predicted);

}  // namespace mlculp
