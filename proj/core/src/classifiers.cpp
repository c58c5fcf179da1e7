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
#include "mlculp/classifiers.hpp"

#include <cmath>
#include <ostream>

#include "mlculp/error.hpp"

namespace mlculp {

Algorithm parse_algorithm(std::string_view text) {
  if (text == "culp") return Algorithm::culp;
  if (text == "miculp") return Algorithm::miculp;
  if (text == "biculp") return Algorithm::biculp;
  throw InvalidArgument("unknown algorithm '" + std::string(text) + "'");
}

std::string_view to_string(Algorithm algorithm) noexcept {
  switch (algorithm) {
    case Algorithm::culp: return "culp";
    case Algorithm::miculp: return "miculp";
    case Algorithm::biculp: return "biculp";
  }
  return "?";
}

LegVariant variant_for(Algorithm algorithm) noexcept {
  switch (algorithm) {
    case Algorithm::culp: return LegVariant::leg;
    case Algorithm::miculp: return LegVariant::mileg;
    case Algorithm::biculp: return LegVariant::bileg;
  }
  return LegVariant::mileg;
}

Fallback parse_fallback(std::string_view text) {
  if (text == "none") return Fallback::none;
  if (text == "top1") return Fallback::top1;
  throw InvalidArgument("unknown fallback '" + std::string(text) + "'");
}

std::string_view to_string(Fallback fallback) noexcept { return fallback == Fallback::top1 ? "top1" : "none"; }

void ClassifierConfig::validate() const {
  if (k < 1) throw InvalidArgument("config: k must be at least 1");
  if (algorithm == Algorithm::miculp) {
    if (!threshold) throw InvalidArgument("config: miculp needs a threshold");
    if (!std::isfinite(*threshold)) throw InvalidArgument("config: threshold must be finite");
    if (normalize && (*threshold < 0.0 || *threshold > 1.0)) {
      throw InvalidArgument("config: normalized threshold must lie in [0, 1]");
    }
  } else if (threshold) {
    throw InvalidArgument("config: threshold only applies to miculp");
  }
}

CulpPrediction argmax_labels(const ScoreMatrix& scores) {
  CulpPrediction out;
  out.labels.reserve(scores.rows());
  out.zero_confidence.reserve(scores.rows());
  for (std::size_t r = 0; r < scores.rows(); ++r) {
    std::size_t best = 0;
    for (std::size_t c = 1; c < scores.cols(); ++c) {
      if (scores(r, c) > scores(r, best)) best = c;
    }
    out.labels.push_back(best);
    out.zero_confidence.push_back(scores.cols() == 0 || scores(r, best) <= 0.0);
  }
  return out;
}

LabelMatrix threshold_labels(const ScoreMatrix& scores, double threshold, bool strict, Fallback fallback) {
  LabelMatrix out(scores.rows(), scores.cols(), 0);
  for (std::size_t r = 0; r < scores.rows(); ++r) {
    bool any = false;
    for (std::size_t c = 0; c < scores.cols(); ++c) {
      const double s = scores(r, c);
      const bool on = strict ? s > threshold : s >= threshold;
      out(r, c) = on ? 1 : 0;
      any = any || on;
    }
    if (!any && fallback == Fallback::top1 && scores.cols() > 0) {
      std::size_t best = 0;
      for (std::size_t c = 1; c < scores.cols(); ++c) {
        if (scores(r, c) > scores(r, best)) best = c;
      }
      out(r, best) = 1;
    }
  }
  return out;
}

LabelMatrix compare_pairs(const ScoreMatrix& scores) {
  if (scores.cols() % 2 != 0) throw InvalidArgument("compare_pairs: odd column count");
  LabelMatrix out(scores.rows(), scores.cols() / 2, 0);
  for (std::size_t r = 0; r < scores.rows(); ++r) {
    for (std::size_t c = 0; c < out.cols(); ++c) out(r, c) = scores(r, 2 * c) > scores(r, 2 * c + 1) ? 1 : 0;
  }
  return out;
}

LabelMatrix one_hot(const CulpPrediction& prediction, std::size_t num_labels) {
  LabelMatrix out(prediction.labels.size(), num_labels, 0);
  for (std::size_t r = 0; r < prediction.labels.size(); ++r) {
    if (num_labels > 0) out(r, prediction.labels[r]) = 1;
  }
  return out;
}

namespace {

void require(const LegGraph& graph, LegVariant variant, std::string_view who) {
  if (graph.variant() != variant) {
    throw VariantMismatch(std::string(who) + " needs a " + std::string(to_string(variant)) + " graph, got " +
                          std::string(to_string(graph.variant())));
  }
}

}  // namespace

CulpPrediction culp_predict(const LegGraph& graph, PredictorKind kind, const ScoreOptions& options) {
  require(graph, LegVariant::leg, "culp");
  return argmax_labels(score_all(graph, kind, false, options));
}

LabelMatrix miculp_predict(const LegGraph& graph, PredictorKind kind, const MiculpOptions& options) {
  require(graph, LegVariant::mileg, "miculp");
  return threshold_labels(score_all(graph, kind, options.normalize, options.scoring), options.threshold,
                          options.strict, options.fallback);
}

LabelMatrix biculp_predict(const LegGraph& graph, PredictorKind kind, const ScoreOptions& options) {
  require(graph, LegVariant::bileg, "biculp");
  return compare_pairs(score_all(graph, kind, false, options));
}

LegGraph build_graph(const ClassifierConfig& config, const LabeledView& train, const UnlabeledView& test,
                     std::size_t jobs) {
  GraphOptions options;
  options.test_test_edges = config.test_test_edges;
  options.jobs = jobs;
  switch (config.algorithm) {
    case Algorithm::culp: return build_leg(train, test, config.similarity, config.k, options);
    case Algorithm::miculp: return build_mileg(train, test, config.similarity, config.k, options);
    case Algorithm::biculp: return build_bileg(train, test, config.similarity, config.k, options);
  }
  throw InvalidArgument("build_graph: unknown algorithm");
}

LabelMatrix classify(const ClassifierConfig& config, const LegGraph& graph) {
  config.validate();
  const ScoreOptions scoring{config.membership_in_degree};
  switch (config.algorithm) {
    case Algorithm::culp:
      return one_hot(culp_predict(graph, config.predictor, scoring), graph.num_labels());
    case Algorithm::miculp:
      return miculp_predict(graph, config.predictor,
                            MiculpOptions{*config.threshold, config.strict_threshold, config.normalize,
                                          config.fallback, scoring});
    case Algorithm::biculp:
      return biculp_predict(graph, config.predictor, scoring);
  }
  throw InvalidArgument("classify: unknown algorithm");
}

LabelMatrix predict(const ClassifierConfig& config, const LabeledView& train, const UnlabeledView& test,
                    std::size_t jobs) {
  config.validate();
  return classify(config, build_graph(config, train, test, jobs));
}

void write_predictions(std::ostream& out, const LabelMatrix& predictions, const std::vector<std::string>& label_names,
                       const std::vector<std::string>& ids) {
  const bool with_ids = !ids.empty();
  if (with_ids && ids.size() != predictions.rows()) throw InvalidArgument("write_predictions: id count mismatch");
  if (with_ids) out << "id,";
  for (std::size_t c = 0; c < label_names.size(); ++c) out << (c ? "," : "") << label_names[c];
  out << '\n';
  for (std::size_t r = 0; r < predictions.rows(); ++r) {
    if (with_ids) out << ids[r] << ',';
    auto row = predictions.row(r);
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << static_cast<int>(row[c]);
    out << '\n';
  }
}

}  // namespace mlculp
