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

#ifndef QAFEAT_SCORING_H_
#define QAFEAT_SCORING_H_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "qafeat/feature_vector.h"

namespace qafeat {

enum class Category { kLexical, kSyntactic, kSemantic, kStructural };
Category CategoryOf(Space space);
std::string_view CategoryName(Category category);

// Spaces that take part in question/document overlap scoring, in report order.
inline constexpr Space kScoredSpaces[] = {
    Space::kUnigram,       Space::kBigram,      Space::kTrigram,
    Space::kWhWord,        Space::kWordShape,   Space::kQuestionLength,
    Space::kTaggedUnigram, Space::kPosTag,      Space::kHeadword,
    Space::kHeadwordTag,   Space::kFocusWord,   Space::kHypernym,
    Space::kNamedEntity,   Space::kHeadwordEntity,
};

struct OverlapScore {
  Space space = Space::kUnigram;
  int64_t numerator = 0;
  int64_t denominator = 1;

  Rational value() const { return Rational(numerator, denominator); }
};

// How a space is scored.
//   kDocumentLength: matched question keys / document word count
//   kQuestionKeys:   matched question keys / question keys in the space
//   kDocumentKeys:   document keys whose entity tag the question carries /
//                    document keys in the space
//   kLengthRatio:    shorter / longer of the two QL weights
enum class OverlapDenominator {
  kDocumentLength,
  kQuestionKeys,
  kDocumentKeys,
  kLengthRatio,
};

struct OverlapRule {
  OverlapDenominator denominator = OverlapDenominator::kDocumentLength;
  // Space of the document vector compared against (HN is compared with the
  // document's NE mentions).
  Space document_space = Space::kUnigram;
};

OverlapRule DefaultOverlapRule(Space space);

// Scores one space of a question/document pair. `document_length` is the
// document's word count (punctuation excluded). Throws kZeroDenominator when
// the rule's denominator is zero.
OverlapScore ScoreOverlap(Space space, const FeatureVector& question,
                          const FeatureVector& document,
                          int64_t document_length);

// Exact mean of the score values. All scores must share a category.
// Throws kEmptyList / kBadConfig.
Rational CategoryAverage(const std::vector<OverlapScore>& scores);
Rational Mean(const std::vector<Rational>& values);

enum class FfMode { kLinear, kLogProduct };
std::string_view FfModeName(FfMode mode);
std::optional<FfMode> FfModeFromName(std::string_view name);

inline constexpr double kLogEpsilon = 1e-9;

// kLinear:     le + sy + se * st
// kLogProduct: -(log10(le+eps) + log10(sy+eps) + log10(se+eps)) * max(st, 1)
// Throws kNegativeInput.
double FfScore(const Rational& le, const Rational& sy, const Rational& se,
               int64_t st, FfMode mode);

// Ranking orientation: larger is better for kLinear, smaller for
// kLogProduct.
bool FfBetter(double a, double b, FfMode mode);

struct FeatureFormScore {
  Rational le;
  Rational sy;
  Rational se;
  int64_t st = 0;
  double ff = 0.0;
  FfMode mode = FfMode::kLogProduct;
};

struct RegressionSample {
  std::vector<double> predictors;
  double response = 0.0;
};

struct RegressionFit {
  double intercept = 0.0;
  std::vector<double> coefficients;
  double r_squared = 0.0;

  double Predict(const std::vector<double>& predictors) const;
};

// Ordinary least squares with an intercept. R^2 = 1 - SS_res / SS_tot and
// is 0 for a constant response. Throws kTooFewSamples (fewer than k+1
// samples or ragged rows) and kRankDeficient.
RegressionFit FitOls(const std::vector<RegressionSample>& samples);

// Single-predictor convenience wrapper.
RegressionFit FitSimple(const std::vector<double>& x,
                        const std::vector<double>& y);

}  // namespace qafeat

#endif  // QAFEAT_SCORING_H_
