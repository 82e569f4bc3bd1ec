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

#ifndef QAFEAT_PIPELINE_H_
#define QAFEAT_PIPELINE_H_

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qafeat/corpus.h"
#include "qafeat/feature_vector.h"
#include "qafeat/resources.h"
#include "qafeat/scoring.h"
#include "qafeat/semantic.h"
#include "qafeat/structural.h"
#include "qafeat/syntactic.h"

namespace qafeat {

// Everything extracted from one question.
struct QuestionFeatures {
  FeatureVector vector;  // all spaces
  HeadwordResult headword;
  std::vector<EntityMention> mentions;
  StructuralResult structural;
  int64_t length = 0;  // words, punctuation excluded
};

QuestionFeatures ExtractQuestionFeatures(const ParsedSentence& question,
                                         const Resources& resources);

struct DocumentMention {
  EntityMention mention;
  int sentence = 0;  // 0-based
};

// Document-side counterpart. Sentences are pooled: n-grams run over the
// concatenated tokens, every sentence contributes a headword (HW/HT) and its
// remaining nouns (FW), HH unions the hypernym chains of all nouns, and WW
// lists the wh-words whose expected answer type has a mention in the text.
struct DocumentFeatures {
  std::string doc_id;
  FeatureVector vector;
  StructuralWeight structural_weight;
  std::vector<DocumentMention> mentions;
  int64_t length = 0;
  std::string normalized_text;  // lowercased tokens joined by single spaces
};

DocumentFeatures ExtractDocumentFeatures(const Document& document,
                                         const Resources& resources);

// Wh-words a mention with `tag` can answer, in the order of the wh-word list.
std::vector<std::string> WhWordsAnsweredBy(std::string_view tag);

struct ScoringOptions {
  FfMode mode = FfMode::kLogProduct;
  std::set<Space> disabled;  // spaces left out of scoring
  // When set, documents are ranked by the fitted (le, sy, se) model instead
  // of the FF score; larger is better.
  std::optional<RegressionFit> regression;
};

struct SpaceScore {
  Space space;
  std::optional<OverlapScore> score;  // empty when the denominator is zero
};

struct PairScore {
  std::vector<SpaceScore> per_space;
  FeatureFormScore form;
  double rank_value = 0.0;  // ff, or the regression prediction
};

// Overlap per space -> category averages (spaces with an undefined score
// are left out; an empty category averages to 0) -> FF score with the
// document's structural weight.
PairScore ScorePair(const QuestionFeatures& question,
                    const DocumentFeatures& document,
                    const ScoringOptions& options);

}  // namespace qafeat

#endif  // QAFEAT_PIPELINE_H_
