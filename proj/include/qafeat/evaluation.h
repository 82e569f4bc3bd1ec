// Copyright 2026 The qafeat Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QAFEAT_EVALUATION_H_
#define QAFEAT_EVALUATION_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qafeat/corpus.h"
#include "qafeat/pipeline.h"
#include "qafeat/resources.h"
#include "qafeat/scoring.h"

namespace qafeat {

struct EvalCounts {
  int64_t ca = 0;  // correct answers
  int64_t ia = 0;  // incorrect answers
  int64_t cd = 0;  // correct top documents
  int64_t id = 0;  // incorrect top documents

  EvalCounts& operator+=(const EvalCounts& other);
  bool operator==(const EvalCounts&) const = default;
};

struct Metrics {
  double precision = 0.0;
  double recall = 0.0;
  double f_measure = 0.0;
};

// precision = CA / (CA + CD), recall = CA / (CA + ID), F = harmonic mean.
// Any 0/0 is 0.
Metrics ComputeMetrics(const EvalCounts& counts);

// Conventional answer metrics: precision = CA / (CA + IA) over answered
// questions, recall = CA / questions.
Metrics StandardMetrics(const EvalCounts& counts, int64_t questions);

struct DatasetTally {
  std::string dataset;
  int64_t correct = 0;
  int64_t total = 0;
};

struct RelevanceScore {
  Rational fr;
  int bucket = 1;
  std::vector<DatasetTally> per_dataset;
};

// fr = sum(correct) / (2 * sum(total)); bucket = clamp(ceil(10 fr), 1, 5).
// Throws kZeroTotal for a non-positive total and kBadConfig when correct is
// negative or exceeds total.
RelevanceScore FeatureRelevance(const std::vector<DatasetTally>& per_dataset);
int RelevanceBucket(const Rational& fr);

// who -> PERSON, when -> DATE, where -> LOCATION, how many/much -> NUMBER,
// which/what -> first hypernym of the headword found in `categories`,
// otherwise OTHER.
std::string ExpectedAnswerType(const ParsedSentence& question,
                               const HeadwordResult& headword,
                               const HypernymGraph& graph,
                               const CategoryMap& categories);

inline constexpr std::string_view kOtherAnswerType = "OTHER";

struct RankedDocument {
  std::string doc_id;
  PairScore score;
};

struct AnswerResult {
  std::string expected_type;
  std::vector<RankedDocument> ranked;
  std::optional<std::string> answer;
  bool fallback = false;  // answer did not come from an EAT-typed mention
  bool snapped = false;   // answer replaced by the best-overlapping option
};

// Ranks the instance's documents by PairScore (ties by doc_id), then takes
// the first mention of the expected type in the top document, falling back
// to its highest-weight non-stopword noun. Non-empty options snap the answer
// to the option with the largest token overlap. Throws kNoDocuments.
AnswerResult RankAndAnswer(const QAInstance& instance,
                           const Resources& resources,
                           const ScoringOptions& options);
AnswerResult RankAndAnswer(const QAInstance& instance,
                           const QuestionFeatures& question,
                           const std::vector<DocumentFeatures>& documents,
                           const Resources& resources,
                           const ScoringOptions& options);

// Lowercases and collapses whitespace runs to single spaces.
std::string NormalizeAnswer(std::string_view text);

struct InstanceOutcome {
  std::string id;
  AnswerResult result;
  bool answer_correct = false;
  bool document_correct = false;
};

// Exact match after normalization; the top document is correct when its
// normalized text contains the normalized gold answer.
InstanceOutcome JudgeInstance(const QAInstance& instance,
                              const AnswerResult& result,
                              const std::vector<DocumentFeatures>& documents);

struct EvalConfig {
  ScoringOptions scoring;
  bool standard_metrics = false;
  // Fit (le, sy, se) -> document correctness on each training portion and
  // rank test documents with the fitted model.
  bool regression = false;
  // Label for the per-feature relevance entry.
  std::string feature_label = "all";
  nlohmann::json config_echo = nlohmann::json::object();
};

struct FoldReport {
  int fold = 0;
  int64_t test_size = 0;
  EvalCounts counts;
  Metrics metrics;
  std::optional<Metrics> standard;
  std::optional<RegressionFit> fit;
  std::string note;
};

struct Report {
  nlohmann::json config_echo;
  EvalCounts counts;
  int64_t questions = 0;
  Metrics metrics;
  std::optional<Metrics> standard;
  std::vector<FoldReport> folds;
  std::map<std::string, RelevanceScore> relevance;

  // {config_echo, pooled: {ca, ia, cd, id, precision, recall, f}, folds,
  //  per_feature_relevance}
  nlohmann::json ToJson() const;
};

// Scores every instance of `dataset` once.
Report Evaluate(const Dataset& dataset, const Resources& resources,
                const EvalConfig& config);

// Scores split.test; with config.regression the model is fitted on
// split.train. `dataset_name` labels the relevance entry.
Report EvaluateHoldout(const Split& split, const std::string& dataset_name,
                       const Resources& resources, const EvalConfig& config);
// k-fold cross validation. Throws kBadK.
Report RunCv(const Dataset& dataset, int k, uint64_t seed,
             const Resources& resources, const EvalConfig& config);

}  // namespace qafeat

#endif  // QAFEAT_EVALUATION_H_
