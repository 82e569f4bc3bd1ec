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

#include "qafeat/lexical.h"

#include <cctype>
#include <map>

#include "qafeat/error.h"
#include "text_util.h"

namespace qafeat {

std::string_view WordShapeName(WordShape shape) {
  switch (shape) {
    case WordShape::kDigit: return "digit";
    case WordShape::kUpperInitial: return "upper";
    case WordShape::kLower: return "lower";
    case WordShape::kOther: return "other";
  }
  return "other";
}

WordShape ShapeOf(std::string_view word) {
  if (word.empty()) return WordShape::kOther;
  bool all_digit = true;
  bool has_upper = false;
  bool has_lower = false;
  for (unsigned char c : word) {
    all_digit = all_digit && std::isdigit(c);
    has_upper = has_upper || std::isupper(c);
    has_lower = has_lower || std::islower(c);
  }
  if (all_digit) return WordShape::kDigit;
  if (std::isupper(static_cast<unsigned char>(word.front()))) {
    return WordShape::kUpperInitial;
  }
  if (has_lower && !has_upper) return WordShape::kLower;
  return WordShape::kOther;
}

bool IsPunctuation(std::string_view word) {
  if (word.empty()) return false;
  for (unsigned char c : word) {
    if (!std::ispunct(c)) return false;
  }
  return true;
}

FeatureVector ExtractNgrams(const std::vector<Token>& tokens, int n) {
  if (n < 1 || n > 3) {
    throw Error(ErrorCode::kBadN, "n-gram order must be 1, 2 or 3, got " +
                                      std::to_string(n));
  }
  if (tokens.empty()) throw Error(ErrorCode::kEmptyInput, "no tokens");

  const int64_t dl = static_cast<int64_t>(tokens.size());
  std::vector<std::string> words;
  for (const Token& t : tokens) {
    if (n > 1 && IsPunctuation(t.surface)) continue;
    words.push_back(internal::ToLower(t.surface));
  }

  static constexpr Space kSpaces[] = {Space::kUnigram, Space::kBigram,
                                      Space::kTrigram};
  std::map<std::string, int64_t> counts;
  for (size_t i = 0; i + n <= words.size(); ++i) {
    std::string gram = words[i];
    for (int j = 1; j < n; ++j) {
      gram += '_';
      gram += words[i + j];
    }
    ++counts[gram];
  }
  FeatureVector out;
  for (const auto& [gram, count] : counts) {
    out.Add(kSpaces[n - 1], gram, Rational(count, dl));
  }
  return out;
}

std::string WhWordOf(const std::vector<Token>& tokens) {
  for (const Token& t : tokens) {
    std::string lower = internal::ToLower(t.surface);
    for (std::string_view wh : kWhWords) {
      if (lower == wh) return lower;
    }
  }
  return std::string(kRestWhWord);
}

int64_t WordCount(const std::vector<Token>& tokens) {
  int64_t n = 0;
  for (const Token& t : tokens) n += !IsPunctuation(t.surface);
  return n;
}

FeatureVector ExtractLexicalBody(const std::vector<Token>& tokens) {
  FeatureVector out;
  for (int n = 1; n <= 3; ++n) out.Merge(ExtractNgrams(tokens, n));
  for (const Token& t : tokens) {
    out.Add(Space::kWordShape, std::string(WordShapeName(ShapeOf(t.surface))),
            Rational(1));
  }
  return out;
}

FeatureVector ExtractLexical(const ParsedSentence& question) {
  if (question.empty()) throw Error(ErrorCode::kEmptyInput, "empty question");
  if (question.tokens.back().surface != "?") {
    throw Error(ErrorCode::kNotAQuestion,
                "question does not end with '?': " + question.text);
  }
  if (question.size() < 2) {
    throw Error(ErrorCode::kEmptyInput, "question has no words before '?'");
  }
  FeatureVector out = ExtractLexicalBody(question.tokens);
  // Question length leaves out the terminal '?'.
  out.Add(Space::kQuestionLength, "len",
          Rational(static_cast<int64_t>(question.size()) - 1));
  out.Add(Space::kWhWord, WhWordOf(question.tokens), Rational(1));
  return out;
}

}  // namespace qafeat
