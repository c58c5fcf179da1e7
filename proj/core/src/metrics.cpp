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
#include "mlculp/metrics.hpp"

#include <string>

#include "mlculp/error.hpp"

namespace mlculp {

Metric parse_metric(std::string_view text) {
  if (text == "hamming_loss" || text == "hamming") return Metric::hamming_loss;
  if (text == "example_f1" || text == "f1") return Metric::example_f1;
  if (text == "micro_f1") return Metric::micro_f1;
  if (text == "macro_f1") return Metric::macro_f1;
  throw InvalidArgument("unknown metric '" + std::string(text) + "'");
}

std::string_view to_string(Metric metric) noexcept {
  switch (metric) {
    case Metric::hamming_loss: return "hamming_loss";
    case Metric::example_f1: return "example_f1";
    case Metric::micro_f1: return "micro_f1";
    case Metric::macro_f1: return "macro_f1";
  }
  return "?";
}

bool higher_is_better(Metric metric) noexcept { return metric != Metric::hamming_loss; }

double MetricReport::get(Metric metric) const noexcept {
  switch (metric) {
    case Metric::hamming_loss: return hamming_loss;
    case Metric::example_f1: return example_f1;
    case Metric::micro_f1: return micro_f1;
    case Metric::macro_f1: return macro_f1;
  }
  return 0.0;
}

namespace {

void check_shapes(const LabelMatrix& truth, const LabelMatrix& predicted) {
  if (truth.rows() != predicted.rows() || truth.cols() != predicted.cols()) {
    throw InvalidArgument("metrics: shape mismatch (" + std::to_string(truth.rows()) + "x" +
                          std::to_string(truth.cols()) + " vs " + std::to_string(predicted.rows()) + "x" +
                          std::to_string(predicted.cols()) + ")");
  }
}

double f1_from_counts(std::size_t tp, std::size_t fp, std::size_t fn, double empty_value) {
  const std::size_t denom = 2 * tp + fp + fn;
  return denom == 0 ? empty_value : 2.0 * static_cast<double>(tp) / static_cast<double>(denom);
}

}  // namespace

double hamming_loss(const LabelMatrix& truth, const LabelMatrix& predicted) {
  check_shapes(truth, predicted);
  const std::size_t cells = truth.rows() * truth.cols();
  if (cells == 0) return 0.0;
  std::size_t wrong = 0;
  auto a = truth.data();
  auto b = predicted.data();
  for (std::size_t i = 0; i < cells; ++i) wrong += (a[i] != b[i]);
  return static_cast<double>(wrong) / static_cast<double>(cells);
}

double example_f1(const LabelMatrix& truth, const LabelMatrix& predicted) {
  check_shapes(truth, predicted);
  if (truth.rows() == 0) return 1.0;
  double sum = 0.0;
  for (std::size_t r = 0; r < truth.rows(); ++r) {
    std::size_t both = 0, t = 0, p = 0;
    for (std::size_t c = 0; c < truth.cols(); ++c) {
      t += truth(r, c);
      p += predicted(r, c);
      both += truth(r, c) & predicted(r, c);
    }
    sum += (t + p == 0) ? 1.0 : 2.0 * static_cast<double>(both) / static_cast<double>(t + p);
  }
  return sum / static_cast<double>(truth.rows());
}

double micro_f1(const LabelMatrix& truth, const LabelMatrix& predicted) {
  check_shapes(truth, predicted);
  std::size_t tp = 0, fp = 0, fn = 0;
  auto a = truth.data();
  auto b = predicted.data();
  for (std::size_t i = 0; i < a.size(); ++i) {
    tp += a[i] & b[i];
    fp += (!a[i]) & b[i];
    fn += a[i] & (!b[i]);
  }
  return f1_from_counts(tp, fp, fn, 1.0);
}

MacroF1 macro_f1(const LabelMatrix& truth, const LabelMatrix& predicted) {
  check_shapes(truth, predicted);
  MacroF1 out;
  out.per_label.reserve(truth.cols());
  double sum = 0.0;
  for (std::size_t c = 0; c < truth.cols(); ++c) {
    std::size_t tp = 0, fp = 0, fn = 0;
    for (std::size_t r = 0; r < truth.rows(); ++r) {
      const bool t = truth(r, c) != 0;
      const bool p = predicted(r, c) != 0;
      tp += t && p;
      fp += !t && p;
      fn += t && !p;
    }
    out.per_label.push_back(f1_from_counts(tp, fp, fn, 0.0));
    sum += out.per_label.back();
  }
  out.macro = truth.cols() == 0 ? 0.0 : sum / static_cast<double>(truth.cols());
  return out;
}

MetricReport evaluate_metrics(const LabelMatrix& truth, const LabelMatrix& predicted) {
  MetricReport report;
  report.hamming_loss = hamming_loss(truth, predicted);
  report.example_f1 = example_f1(truth, predicted);
  report.micro_f1 = micro_f1(truth, predicted);
  auto macro = macro_f1(truth, predicted);
  report.macro_f1 = macro.macro;
  report.per_label_f1 = std::move(macro.per_label);
  return report;
}

}  // namespace mlculp
