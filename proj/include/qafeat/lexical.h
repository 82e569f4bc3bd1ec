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

#ifndef QAFEAT_LEXICAL_H_
#define QAFEAT_LEXICAL_H_

#include <string>
#include <string_view>
#include <vector>

#include "qafeat/corpus.h"
#include "qafeat/feature_vector.h"

namespace qafeat {

// The seven wh-words; anything else maps to kRestWhWord.
inline constexpr std::string_view kWhWords[] = {"which", "how",  "where", "what",
                                                "why",   "when", "who"};
inline constexpr std::string_view kRestWhWord = "rest";

enum class WordShape { kDigit, kUpperInitial, kLower, kOther };
std::string_view WordShapeName(WordShape shape);
// Classes are tested in the order digit, upper-initial, lower, other.
WordShape ShapeOf(std::string_view word);

bool IsPunctuation(std::string_view word);

// n-grams over `tokens`, lowercased and joined with '_'. Weight = count / DL
// where DL is the full token count. Unigrams keep punctuation tokens;
// bigrams and trigrams are formed after dropping them.
// Throws kBadN (n outside 1..3) and kEmptyInput.
FeatureVector ExtractNgrams(const std::vector<Token>& tokens, int n);

// First wh-word in token order, or "rest".
std::string WhWordOf(const std::vector<Token>& tokens);

// Number of tokens that are not punctuation.
int64_t WordCount(const std::vector<Token>& tokens);

// UN, BI, TR and WS over an arbitrary token run (documents use this).
FeatureVector ExtractLexicalBody(const std::vector<Token>& tokens);

// Full lexical vector of a question: the body plus WW and QL ("len", the
// token count without the terminal "?"). The last token must be "?"
// (kNotAQuestion); empty input or a bare "?" throws kEmptyInput.
FeatureVector ExtractLexical(const ParsedSentence& question);

}  // namespace qafeat

#endif  // QAFEAT_LEXICAL_H_
