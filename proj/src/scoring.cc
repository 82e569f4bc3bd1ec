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

#include "qafeat/scoring.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include <Eigen/Dense>

#include "qafeat/error.h"

namespace qafeat {

namespace {

// Tag prefix of an NE key ("location:telangana" -> "location"), or the key
// itself when it has no prefix (HN keys are bare tags).
std::string TagOf(const std::string& key) {
  size_t colon = key.find(':');
  return colon == std::string::npos ? key : key.substr(0, colon);
}

}  // namespace

Category CategoryOf(Space space) {
  switch (space) {
    case Space::kUnigram:
    case Space::kBigram:
    case Space::kTrigram:
    case Space::kWhWord:
    case Space::kWordShape:
    case Space::kQuestionLength:
      return Category::kLexical;
    case Space::kTaggedUnigram:
    case Space::kPosTag:
    case Space::kHeadword:
    case Space::kHeadwordTag:
    case Space::kFocusWord:
      return Category::kSyntactic;
    case Space::kHypernym:
    case Space::kNamedEntity:
    case Space::kHeadwordEntity:
      return Category::kSemantic;
    case Space::kStructuralDp:
    case Space::kStructuralDr:
    case Space::kStructuralNer:
      return Category::kStructural;
  }
  return Category::kStructural;
}

std::string_view CategoryName(Category category) {
  switch (category) {
    case Category::kLexical: return "lexical";
    case Category::kSyntactic: return "syntactic";
    case Category::kSemantic: return "semantic";
    case Category::kStructural: return "structural";
  }
  return "unknown";
}

OverlapRule DefaultOverlapRule(Space space) {
  switch (space) {
    case Space::kQuestionLength:
      return {OverlapDenominator::kLengthRatio, space};
    case Space::kHypernym:
      return {OverlapDenominator::kQuestionKeys, space};
    case Space::kNamedEntity:
      return {OverlapDenominator::kDocumentKeys, Space::kNamedEntity};
    case Space::kHeadwordEntity:
      return {OverlapDenominator::kDocumentKeys, Space::kNamedEntity};
    default:
      return {OverlapDenominator::kDocumentLength, space};
  }
}

OverlapScore ScoreOverlap(Space space, const FeatureVector& question,
                          const FeatureVector& document,
                          int64_t document_length) {
  const OverlapRule rule = DefaultOverlapRule(space);
  OverlapScore score;
  score.space = space;
  auto zero = [&]() {
    return Error(ErrorCode::kZeroDenominator,
                 "zero denominator scoring " + std::string(SpaceName(space)));
  };

  switch (rule.denominator) {
    case OverlapDenominator::kDocumentLength:
    case OverlapDenominator::kQuestionKeys: {
      int64_t matched = 0;
      for (const std::string& name : question.Names(space)) {
        matched += document.Contains({rule.document_space, name});
      }
      int64_t denominator = rule.denominator == OverlapDenominator::kDocumentLength
                                ? document_length
                                : static_cast<int64_t>(question.CountIn(space));
      if (denominator <= 0) throw zero();
      score.numerator = matched;
      score.denominator = denominator;
      break;
    }
    case OverlapDenominator::kDocumentKeys: {
      std::set<std::string> tags;
      for (const std::string& name : question.Names(space)) tags.insert(TagOf(name));
      const std::vector<std::string> doc_keys = document.Names(rule.document_space);
      if (doc_keys.empty()) throw zero();
      int64_t matched = 0;
      for (const std::string& key : doc_keys) matched += tags.count(TagOf(key));
      score.numerator = matched;
      score.denominator = static_cast<int64_t>(doc_keys.size());
      break;
    }
    case OverlapDenominator::kLengthRatio: {
      const FeatureKey key{space, "len"};
      Rational q = question.Get(key);
      Rational d = document.Get(key);
      Rational hi = std::max(q, d);
      if (hi == Rational(0)) throw zero();
      Rational ratio = std::min(q, d) / hi;
      score.numerator = ratio.numerator();
      score.denominator = ratio.denominator();
      break;
    }
  }
  return score;
}

Rational Mean(const std::vector<Rational>& values) {
  if (values.empty()) throw Error(ErrorCode::kEmptyList, "mean of an empty list");
  Rational sum(0);
  for (const Rational& v : values) sum += v;
  return sum / static_cast<int64_t>(values.size());
}

Rational CategoryAverage(const std::vector<OverlapScore>& scores) {
  if (scores.empty()) {
    throw Error(ErrorCode::kEmptyList, "category average of no scores");
  }
  const Category category = CategoryOf(scores.front().space);
  std::vector<Rational> values;
  values.reserve(scores.size());
  for (const OverlapScore& s : scores) {
    if (CategoryOf(s.space) != category) {
      throw Error(ErrorCode::kBadConfig, "scores from different categories");
    }
    values.push_back(s.value());
  }
  return Mean(values);
}

std::string_view FfModeName(FfMode mode) {
  return mode == FfMode::kLinear ? "linear" : "log_product";
}

std::optional<FfMode> FfModeFromName(std::string_view name) {
  if (name == "linear") return FfMode::kLinear;
  if (name == "log_product") return FfMode::kLogProduct;
  return std::nullopt;
}

double FfScore(const Rational& le, const Rational& sy, const Rational& se,
               int64_t st, FfMode mode) {
  if (le < Rational(0) || sy < Rational(0) || se < Rational(0) || st < 0) {
    throw Error(ErrorCode::kNegativeInput, "feature form inputs must be non-negative");
  }
  const double l = ToDouble(le), y = ToDouble(sy), e = ToDouble(se);
  if (mode == FfMode::kLinear) return l + y + e * static_cast<double>(st);
  const double log_sum = std::log10(l + kLogEpsilon) + std::log10(y + kLogEpsilon) +
                         std::log10(e + kLogEpsilon);
  return -log_sum * static_cast<double>(std::max<int64_t>(st, 1));
}

bool FfBetter(double a, double b, FfMode mode) {
  return mode == FfMode::kLinear ? a > b : a < b;
}

double RegressionFit::Predict(const std::vector<double>& predictors) const {
  if (predictors.size() != coefficients.size()) {
    throw Error(ErrorCode::kBadConfig, "predictor count does not match the fit");
  }
  double y = intercept;
  for (size_t i = 0; i < predictors.size(); ++i) y += coefficients[i] * predictors[i];
  return y;
}

RegressionFit FitOls(const std::vector<RegressionSample>& samples) {
  if (samples.empty()) throw Error(ErrorCode::kTooFewSamples, "no samples");
  const size_t k = samples.front().predictors.size();
  for (const RegressionSample& s : samples) {
    if (s.predictors.size() != k) {
      throw Error(ErrorCode::kTooFewSamples, "samples have different predictor counts");
    }
  }
  const size_t n = samples.size();
  if (n < k + 1) {
    throw Error(ErrorCode::kTooFewSamples,
                "need at least " + std::to_string(k + 1) + " samples, got " +
                    std::to_string(n));
  }

  Eigen::MatrixXd x(n, k + 1);
  Eigen::VectorXd y(n);
  for (size_t i = 0; i < n; ++i) {
    x(i, 0) = 1.0;
    for (size_t j = 0; j < k; ++j) x(i, j + 1) = samples[i].predictors[j];
    y(i) = samples[i].response;
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(x);
  if (qr.rank() < static_cast<Eigen::Index>(k + 1)) {
    throw Error(ErrorCode::kRankDeficient, "design matrix is rank deficient");
  }
  Eigen::VectorXd beta = qr.solve(y);

  RegressionFit fit;
  fit.intercept = beta(0);
  fit.coefficients.assign(beta.data() + 1, beta.data() + beta.size());
  const Eigen::VectorXd residual = y - x * beta;
  const double ss_res = residual.squaredNorm();
  const double ss_tot = (y.array() - y.mean()).square().sum();
  fit.r_squared = ss_tot == 0.0 ? 0.0 : 1.0 - ss_res / ss_tot;
  return fit;
}

RegressionFit FitSimple(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::kTooFewSamples, "x and y differ in length");
  }
  std::vector<RegressionSample> samples;
  samples.reserve(x.size());
  for (size_t i = 0; i < x.size(); ++i) samples.push_back({{x[i]}, y[i]});
  return FitOls(samples);
}

}  // namespace qafeat
